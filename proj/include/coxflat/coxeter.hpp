#pragma once

#include <array>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxflat {

constexpr int kInfiniteOrder = std::numeric_limits<int>::max();
inline bool order_is_finite(int m) { return m != kInfiniteOrder; }

// Thrown when a braid-class exploration hits its word cap. The answer is
// inconclusive, never wrong.
struct InconclusiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symmetric matrix of orders m_ij in {2,3,...} u {inf} over vertices 0..r-1.
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(int rank);

  static CoxeterMatrix with_default(int rank, int m = 2);
  static CoxeterMatrix type_A(int n);
  static CoxeterMatrix type_B(int n);
  static CoxeterMatrix type_D(int n);
  static CoxeterMatrix type_E(int n);  // n in {6,7,8}
  static CoxeterMatrix type_F4();
  static CoxeterMatrix type_H(int n);  // n in {3,4}
  static CoxeterMatrix dihedral(int m);              // I2(m)
  static CoxeterMatrix dihedral_times_A1(int m);     // I2(m) x A1
  static CoxeterMatrix affine_A2();                  // all m = 3
  // Rank 3 with m01 = p, m12 = q, m02 = r (the paper's (m12, m23, m13)).
  static CoxeterMatrix triangle(int p, int q, int r);

  int rank() const { return rank_; }
  void set_order(int i, int j, int m);
  int order(int i, int j) const;  // throws on i == j, out of range, or unset
  bool is_set(int i, int j) const;
  bool all_set() const;

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  int vertex_by_name(const std::string& name) const;  // -1 if absent

  bool operator==(const CoxeterMatrix& o) const {
    return rank_ == o.rank_ && orders_ == o.orders_;
  }

 private:
  int rank_;
  std::vector<std::vector<int>> orders_;  // 0 = unset
  std::vector<std::string> names_;
};

using Word = std::vector<int>;

// A group element, held as its ShortLex-least reduced word.
struct Element {
  Word normal;

  int length() const { return static_cast<int>(normal.size()); }
  bool is_identity() const { return normal.empty(); }
  bool is_even() const { return normal.size() % 2 == 0; }
  int sign() const { return normal.size() % 2 == 0 ? 1 : -1; }

  bool operator==(const Element& o) const { return normal == o.normal; }
  // ShortLex order.
  bool operator<(const Element& o) const {
    if (normal.size() != o.normal.size()) return normal.size() < o.normal.size();
    return normal < o.normal;
  }
};

struct GrowthCounts {
  std::vector<long> counts;  // b_0 .. b_N
  bool operator==(const GrowthCounts& o) const { return counts == o.counts; }
};

struct Enumeration {
  std::vector<Element> elements;  // sorted ShortLex
  GrowthCounts growth;
  bool complete = false;  // true when the whole group was listed
};

// Word problem and enumeration for a fixed matrix. All queries are logically
// pure; an internal memo cache is guarded for concurrent use.
class Coxeter {
 public:
  explicit Coxeter(CoxeterMatrix m, std::size_t braid_cap = 1'000'000);

  const CoxeterMatrix& matrix() const { return m_; }

  bool is_reduced(const Word& w) const;
  Element normal_form(const Word& w) const;
  Element element(std::initializer_list<int> letters) const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;

  static constexpr int kAll = -1;
  Enumeration enumerate(int max_length) const;  // kAll requires a finite matrix
  std::vector<Element> even_elements(int max_length) const;

 private:
  Word nf_word(const Word& w) const;
  void braid_neighbors(const Word& w, std::vector<Word>& out) const;

  CoxeterMatrix m_;
  std::size_t braid_cap_;
  mutable std::mutex memo_mutex_;
  mutable std::map<Word, Word> memo_;
};

// Classification of a rank-3 parabolic by its sorted orders (p <= q <= r).
struct TriangleClass {
  enum Kind { Infinite, Dihedral, E233, E234, E235 } kind = Infinite;
  int p = 0, q = 0, r = 0;

  bool finite() const { return kind != Infinite; }
  std::string str() const;
};

TriangleClass classify_triangle(int p, int q, int r);
TriangleClass triangle_type(const CoxeterMatrix& m, std::array<int, 3> delta);

// |W(p,q,r)| = 4 / (1/p + 1/q + 1/r - 1); throws on infinite type.
long finite_rank3_order(int p, int q, int r);

// [W_delta : W_edge] = |W_delta| / (2 m_edge).
long parabolic_index(const CoxeterMatrix& m, std::array<int, 3> delta,
                     std::pair<int, int> edge);

// Recognizes disjoint unions of the finite-type diagrams.
bool is_finite(const CoxeterMatrix& m);

}  // namespace coxflat

#pragma once

// Finite abelian groups presented as products of cyclic factors, their
// subgroups and quotients, and symmetric bicharacters with values in the
// circle group given by rational phases.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tyw {

// A rational number t taken mod 1, standing for exp(2*pi*i*t).
class Phase {
 public:
  Phase() = default;
  Phase(std::int64_t num, std::int64_t den);

  // "p/q", "p", or "-p/q"; reduced mod 1.
  static Phase parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Phase operator+(const Phase& o) const;
  Phase operator-() const;
  Phase operator-(const Phase& o) const { return *this + (-o); }
  Phase times(std::int64_t k) const;

  std::complex<double> value() const;
  std::string str() const;

  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase& a, const Phase& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct GroupElement {
  std::vector<int> coords;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Z_{n_1} x ... x Z_{n_k}. Elements are addressed by a dense index in
// [0, order) in mixed radix with the first factor most significant, so
// index order is lexicographic order of coordinate tuples.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> factors);

  // "n1,n2,..."
  static FiniteAbelianGroup parse(std::string_view spec);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }

  GroupElement element(int index) const;
  int index(const GroupElement& e) const;

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int coord(int index, int factor) const { return coords_[index][factor]; }

  // "3" for cyclic groups, "(1,0)" otherwise.
  std::string format(int index) const;
  // Accepts "3", "1,0", or "(1,0)"; coordinates are reduced mod n_i.
  int parse_element(std::string_view text) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  int order_ = 1;
  std::vector<std::vector<int>> coords_;
  std::vector<int> add_;
  std::vector<int> neg_;
};

class Subgroup {
 public:
  // Throws InvariantError unless `elements` is closed under addition and
  // negation and contains 0.
  Subgroup(const FiniteAbelianGroup& group, std::vector<int> elements);

  static Subgroup generated_by(const FiniteAbelianGroup& group, const std::vector<int>& gens);
  static Subgroup trivial(const FiniteAbelianGroup& group);
  static Subgroup whole(const FiniteAbelianGroup& group);

  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int parent_order() const { return static_cast<int>(member_.size()); }
  bool contains(int g) const { return member_[g] != 0; }

  std::string format(const FiniteAbelianGroup& group) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.elements_ <=> b.elements_;
  }

 private:
  std::vector<int> elements_;
  std::vector<char> member_;
};

// G/K with cosets ordered by their canonical (smallest-index) representative.
class QuotientGroup {
 public:
  QuotientGroup(const FiniteAbelianGroup& group, Subgroup k);

  const Subgroup& subgroup() const { return k_; }
  int size() const { return static_cast<int>(reps_.size()); }
  int coset_of(int g) const { return coset_of_[g]; }
  int representative(int coset) const { return reps_[coset]; }
  const std::vector<int>& members(int coset) const { return members_[coset]; }
  // Coset containing g + (any member of `coset`).
  int translate(int g, int coset) const { return translate_[static_cast<std::size_t>(g) * size() + coset]; }
  int add(int c1, int c2) const { return translate(reps_[c1], c2); }

 private:
  Subgroup k_;
  std::vector<int> coset_of_;
  std::vector<int> reps_;
  std::vector<std::vector<int>> members_;
  std::vector<int> translate_;
};

// All subgroups, ordered by size and then by sorted element list. Throws
// SizeError when |G| exceeds `bound`.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& group, int bound = 64);

// chi((g_i),(h_j)) = exp(2*pi*i * sum_ij g_i h_j M_ij).
class Bicharacter {
 public:
  // Throws InvariantError unless M is symmetric mod 1 and n_i*M_ij is integral.
  Bicharacter(const FiniteAbelianGroup& group, std::vector<std::vector<Phase>> matrix);

  // M = diag(1/n_i).
  static Bicharacter standard(const FiniteAbelianGroup& group);
  // {"matrix": [["p/q", ...], ...]}; entries may also be JSON integers.
  static Bicharacter from_json(const FiniteAbelianGroup& group, std::string_view json_text);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::vector<Phase>>& matrix() const { return matrix_; }

  Phase eval(int g, int h) const { return table_[static_cast<std::size_t>(g) * group_.order() + h]; }
  std::complex<double> value(int g, int h) const {
    return values_[static_cast<std::size_t>(g) * group_.order() + h];
  }

  std::vector<int> radical() const;
  bool is_nondegenerate() const { return radical().size() == 1; }

  std::string to_json() const;

 private:
  FiniteAbelianGroup group_;
  std::vector<std::vector<Phase>> matrix_;
  std::vector<Phase> table_;
  std::vector<std::complex<double>> values_;
};

// A character rho of K given by its phases on the elements of K.
class CharacterOfK {
 public:
  // Throws InvariantError if rho(k + k') != rho(k) + rho(k') on K.
  CharacterOfK(const FiniteAbelianGroup& group, const Subgroup& k, std::map<int, Phase> phases);

  static CharacterOfK trivial(const FiniteAbelianGroup& group, const Subgroup& k);

  Phase operator()(int k) const { return phases_.at(k); }
  bool is_trivial() const;

 private:
  std::map<int, Phase> phases_;
};

// K^perp = {g : chi(k,g) = 1 for all k in K}. Throws InvariantError if chi
// is degenerate or |K||K^perp| != |G|.
Subgroup orthogonal(const Bicharacter& chi, const Subgroup& k);

// K^perp_rho = {g : chi(g,k) = rho(-k) for all k in K}, a coset of K^perp.
std::vector<int> orthogonal_rho(const Bicharacter& chi, const Subgroup& k, const CharacterOfK& rho);

}  // namespace tyw

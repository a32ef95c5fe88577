#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "compalg/budget.hpp"
#include "compalg/laurent.hpp"

namespace compalg {

/// Acts on the exponent lattice by e_i -> sign[i] * e_{perm[i]}, so x_i is
/// sent to x_{perm[i]} or its inverse.
struct SignedPerm {
  std::vector<std::size_t> perm;
  std::vector<int> sign;

  static SignedPerm identity(std::size_t n);
  [[nodiscard]] std::size_t size() const noexcept { return perm.size(); }
  /// (g * h) acts as g after h.
  friend SignedPerm operator*(const SignedPerm& g, const SignedPerm& h);
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

enum class GroupFlavor { Sym, Hyperoctahedral, EvenSigned, Product, TrivialSigns };

/// A Weyl group realized as signed permutations. Sym is S_n, Hyperoctahedral
/// the full signed group W_n, EvenSigned its index-2 subgroup of type D,
/// TrivialSigns the pure sign changes (Z/2)^n with no permutations, and
/// Product a direct product acting on consecutive blocks of variables.
class SignedPermGroup {
 public:
  static SignedPermGroup sym(std::size_t n);
  static SignedPermGroup hyperoctahedral(std::size_t n);
  static SignedPermGroup even_signed(std::size_t n);
  static SignedPermGroup trivial_signs(std::size_t n);
  static SignedPermGroup product(std::vector<SignedPermGroup> parts);
  /// "A", "Sym", "BC", "Hyperoctahedral", "D", "EvenSigned", "TrivialSigns".
  static SignedPermGroup from_name(const std::string& name, std::size_t n);

  [[nodiscard]] GroupFlavor flavor() const noexcept { return flavor_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<SignedPermGroup>& parts() const noexcept {
    return parts_;
  }
  [[nodiscard]] mpz_class order() const;
  [[nodiscard]] std::vector<SignedPerm> generators() const;
  /// Every element; the budget is polled while enumerating.
  [[nodiscard]] std::vector<SignedPerm> elements(const Budget& budget = Budget()) const;
  [[nodiscard]] bool contains(const SignedPerm& g) const;
  [[nodiscard]] std::string to_string() const;

 private:
  GroupFlavor flavor_ = GroupFlavor::Sym;
  std::size_t n_ = 0;
  std::vector<SignedPermGroup> parts_;
};

[[nodiscard]] LaurentPoly act(const SignedPerm& g, const LaurentPoly& f);
[[nodiscard]] bool is_invariant(const SignedPermGroup& group, const LaurentPoly& f);
/// (1/|G|) sum over G of g.f
[[nodiscard]] LaurentPoly reynolds(const SignedPermGroup& group,
                                   const LaurentPoly& f,
                                   const Budget& budget = Budget());

/// Sym: e_1..e_n in x. Hyperoctahedral: e_1..e_n in x_i + x_i^-1.
[[nodiscard]] std::vector<LaurentPoly> fundamental_generators(GroupFlavor flavor,
                                                              std::size_t n);

/// |G| / |H|; NotDividing when |H| does not divide |G|.
[[nodiscard]] mpz_class weyl_index(const SignedPermGroup& g,
                                   const SignedPermGroup& h);

enum class KPair { Quaternionic, Split, OneDimSplit };

/// Rank of the free Z-module multiplying K_*(k): (2n)!/n!, C(2n, n), or 2.
[[nodiscard]] mpz_class ktheory_rank(KPair pair, std::size_t n = 1);

/// Invariant tested by verify_generation, with the verdict.
struct GenerationEntry {
  LaurentPoly invariant;
  bool expressible = false;
};

struct GenerationReport {
  GroupFlavor flavor = GroupFlavor::Sym;
  std::size_t n = 0;
  std::size_t degree_bound = 0;
  std::size_t candidate_products = 0;
  std::vector<GenerationEntry> entries;
  [[nodiscard]] std::size_t inconclusive() const;
};

/// Orbit sums of monomials with sum |a_i| <= bound are tested for membership
/// in the span of generator products of weighted degree <= bound, where the
/// i-th generator has weight i (and e_n^-1 weight n for Sym). Failures are
/// "inconclusive at this bound", never refutations. n <= 3, bound <= 6.
[[nodiscard]] GenerationReport verify_generation(GroupFlavor flavor,
                                                 std::size_t n,
                                                 std::size_t degree_bound,
                                                 const Budget& budget = Budget());

/// Same test for one given invariant.
[[nodiscard]] bool expressible_within(GroupFlavor flavor, const LaurentPoly& f,
                                      std::size_t degree_bound);

[[nodiscard]] std::string to_string(GroupFlavor flavor);

}  // namespace compalg

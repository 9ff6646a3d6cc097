#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetaorb/rational.hpp"

namespace thetaorb {

// Cartan type of an irreducible root system.  `isShort` marks a simply-laced
// component made of short roots of a doubly- or triply-laced ambient system
// (printed with a leading "~", e.g. "~A2").
struct CartanLabel {
  char family = 'A';
  int rank = 0;
  bool isShort = false;

  std::string str() const;
  auto operator<=>(const CartanLabel&) const = default;
};

CartanLabel parse_cartan_label(const std::string& text);  // "A4", "~A1", "E8"

// Number of roots of an irreducible system of the given type.
int root_count(char family, int rank);

class RootSystemData {
 public:
  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const;

  int ambient_dim() const { return static_cast<int>(roots_.rows()); }
  // ambient vectors are `scale()` times the usual coordinates, so that every
  // root is integral (2 for F4 and E6-E8, 1 otherwise)
  int scale() const { return scale_; }
  int num_roots() const { return static_cast<int>(roots_.cols()); }
  int num_positive() const { return num_roots() / 2; }

  const IntMatrix& roots() const { return roots_; }           // ambient x N
  const IntMatrix& root_coeffs() const { return coeffs_; }     // rank x N, simple-root coordinates
  const IntMatrix& coroot_coeffs() const { return cocoeffs_; } // rank x N, simple-coroot coordinates
  IntVector root(int i) const { return roots_.col(i); }
  RatVector coroot(int i) const;  // 2 alpha / (alpha, alpha), ambient coordinates

  // simple roots come first among the roots: index i < rank is alpha_{i+1}
  int simple(int i) const { return i; }
  bool is_positive(int i) const { return i < num_positive(); }
  int negative_of(int i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  int height(int i) const;
  std::int64_t norm2(int i) const { return norms_[static_cast<std::size_t>(i)]; }
  bool is_long(int i) const { return norm2(i) == maxNorm_; }
  bool has_two_lengths() const { return minNorm_ != maxNorm_; }
  int index_of_coeffs(const IntVector& coeffs) const;  // -1 if not a root

  const IntMatrix& cartan() const { return cartan_; }  // A(i, j) = <alpha_j, alpha_i^vee>
  const RatMatrix& fundamental_weights() const { return weights_; }  // ambient x rank
  const RatVector& rho() const { return rho_; }
  const RatVector& rho_check() const { return rhoCheck_; }

  // <x, alpha_i^vee> for an ambient rational vector x
  Rational pairing(const RatVector& x, int rootIndex) const;
  // <nu, alpha^vee> for nu in fundamental-weight coordinates
  Rational pairing_weight(const RatVector& nu, int rootIndex) const;
  // fundamental-weight coordinates of an ambient vector
  RatVector weight_coords(const RatVector& x) const;

  // product of the degrees, read off from the heights of the positive roots
  std::int64_t weyl_group_order() const;

  friend RootSystemData build(char family, int rank);

 private:
  char family_ = 'A';
  int rank_ = 0;
  int scale_ = 1;
  IntMatrix roots_, coeffs_, cocoeffs_, cartan_;
  std::vector<std::int64_t> norms_;
  std::int64_t minNorm_ = 0, maxNorm_ = 0;
  RatMatrix weights_;
  RatVector rho_, rhoCheck_;
  std::map<std::vector<std::int64_t>, int> lookup_;
};

// Bourbaki numbering; supported: A_r (r>=1), B_r, C_r (r>=2), D_r (r>=3),
// G2, F4, E6, E7, E8.  Throws std::invalid_argument otherwise.
RootSystemData build(char family, int rank);
RootSystemData build(const std::string& label);

// The unique label of an irreducible Cartan matrix (no length decoration).
CartanLabel classify_component(const IntMatrix& cartan);

struct SubsystemComponent {
  CartanLabel label;
  std::vector<int> simpleRoots;  // indices into the ambient root list
  std::vector<int> roots;        // all members, both signs
};

struct SubsystemReport {
  std::vector<int> memberRoots;
  std::vector<int> simpleRoots;
  std::vector<SubsystemComponent> components;
  // the subsystem equals the set of ambient roots in its rational span
  bool spanClosed = true;

  std::string str() const;  // "A4+A3", "2A2+2A1", "~A2+A2", "" for empty
  std::map<CartanLabel, int> multiset() const;
};

// Phi_nu = {alpha : <nu, alpha^vee> in Z}, nu in fundamental-weight coordinates.
SubsystemReport integral_subsystem(const RootSystemData& rs, const RatVector& nu);

// For the Langlands dual system: roots beta of `dual` whose simple-root
// coordinates pair integrally with nu, where nu is given in the fundamental
// weight coordinates of the original group.  (The simple roots of the dual are
// the simple coroots of the original.)
SubsystemReport integral_subsystem_dual(const RootSystemData& dual, const RatVector& nu);

// Builds the report for any root subset closed under negation.
SubsystemReport subsystem_from_members(const RootSystemData& rs, std::vector<int> members);

// Parses a printed component list into a multiset.  Primes and surrounding
// parentheses are ignored ("(4A1)''" -> {A1: 4}); "" or "empty" is empty.
std::map<CartanLabel, int> parse_component_list(const std::string& text);
std::string format_component_list(const std::map<CartanLabel, int>& components);
int positive_root_count(const std::map<CartanLabel, int>& components);

}  // namespace thetaorb

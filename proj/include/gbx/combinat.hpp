#ifndef GBX_COMBINAT_HPP
#define GBX_COMBINAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbx/boundcert.hpp"
#include "gbx/closedform.hpp"

namespace gbx {

// --- root-of-unity vectors --------------------------------------------------

// Vectors of B = {1, w, ..., w^{p-1}}^n, stored as exponent vectors: entry e
// means the coordinate w^e.
struct RootVectorFamily {
  int nvars;
  long long p;
  std::vector<std::vector<int>> vectors;
};

std::vector<std::vector<int>> enumerate_root_exponents(int n, long long p,
                                                       std::size_t guard = kDefaultEnumerationGuard);
Cyclotomic root_dot(const std::vector<int>& a, const std::vector<int>& b, long long p);
long long product_class(const std::vector<int>& v, long long p);  // j with prod = w^j
std::vector<Cyclotomic> to_cyclotomic_point(const std::vector<int>& e, long long p);

// Every w in B must be orthogonal (exact cyclotomic dot product) to some
// member of T.
bool is_balancing_family(const RootVectorFamily& T,
                         std::size_t guard = kDefaultEnumerationGuard);

// Cover searches build a |B| x |B| orthogonality table, so they carry a much
// tighter guard than plain enumeration.
inline constexpr std::size_t kDefaultSearchGuard = 4096;

struct KSearchReport {
  int nvars = 0;
  long long p = 0;
  int k_max = 0;
  bool exhaustive = true;
  std::optional<int> optimum;  // K(n,p) when <= k_max
  int lower_bound = 1;         // verified: no balancing family below this size
  std::vector<std::vector<int>> witness;
  unsigned long long nodes = 0;
  std::string symmetry = "first vector normalized to (1,...,1)";
};

// Exact minimum balancing family size, by exhaustive cover search over B.
// Coordinate-scaling symmetry lets the search fix (1,...,1) as a member
// without losing exactness.
KSearchReport brute_force_K(int n, long long p, int k_max,
                            std::size_t guard = kDefaultSearchGuard);

enum class OrthoVerdict { confirmed, violated, not_applicable, outside_regime };

// Orthogonality class implication: y.z = 0 and y in B_i forces z in B_{p-i}.
// Valid for odd p, or p = 2 with 4 | n; p | n required.
OrthoVerdict orthogonal_class_check(const std::vector<int>& y, const std::vector<int>& z,
                                    long long p);

struct OrthoSweepReport {
  int nvars = 0;
  long long p = 0;
  bool in_regime = false;
  unsigned long long pairs = 0;
  unsigned long long orthogonal_pairs = 0;
  unsigned long long violations = 0;
};

OrthoSweepReport orthogonal_class_sweep(int n, long long p,
                                        std::size_t guard = kDefaultEnumerationGuard);

struct BalancingClassStep {
  int class_index;          // members of T in B_i
  int vanish_class;         // class on which the product polynomial vanishes
  std::size_t class_size;   // |T_i|
  std::vector<int> witness_q;
  Monomial y;
  long long degree_bound;   // deg(y)
};

struct BalancingCertificate {
  bool certified = false;
  std::string refused_stage;
  int nvars = 0;
  long long p = 0;
  std::size_t family_size = 0;
  long long total_bound = 0;  // sum of the p per-class degree bounds
  long long target = 0;       // n(p-1)
  std::vector<BalancingClassStep> steps;
};

// End-to-end certificate that a balancing family T has at least n(p-1)
// members: per residue class i, the product of the linear forms of T_i
// vanishes on its orthogonality-mate class and is nonzero at a chosen
// outside point, so the degree certifier bounds deg >= n(p-1)/p; the p
// bounds add up.
BalancingCertificate balancing_lower_certificate(const RootVectorFamily& T,
                                                 std::size_t guard = kDefaultEnumerationGuard);

// --- set families ------------------------------------------------------------

// Subsets of [ground] encoded as bitmasks (element i = bit i-1).
struct SetFamily {
  int ground = 0;
  std::vector<std::uint64_t> sets;

  static SetFamily from_lists(int ground, const std::vector<std::vector<int>>& lists);
  std::vector<std::vector<int>> to_lists() const;
};

// The 2n intervals {i, ..., i+2n-1} in [4n].
SetFamily galvin_construction(int n);

// Every 2n-subset of [4n] must meet some member in exactly n elements.
// Exhaustive over C(4n, 2n).
bool is_galvin_family(const SetFamily& family, int n, std::size_t guard = 5000000);

struct MSearchReport {
  int n = 0;
  bool exhaustive = true;
  std::optional<int> optimum;
  int lower_bound = 1;
  SetFamily witness;
  unsigned long long nodes = 0;
};

// Exact m(n) by exhaustive cover search over all candidate 2n-subsets.
MSearchReport brute_force_m(int n);

struct CountingReport {
  long long p = 0;
  mpz_class lhs;  // 4p C(2p,p)
  mpz_class rhs;  // C(4p,p)
  bool holds = false;
  mpz_class ti_formula;  // |T_i| = 2 C(2p,p)
  std::optional<unsigned long long> ti_enumerated;  // direct count, p <= 3
};

CountingReport counting_inequality(long long p);

struct WitnessCReport {
  bool found = false;
  std::uint64_t c_mask = 0;
  std::vector<int> c_elements;
  unsigned long long scanned = 0;
};

// A 3p-subset C of [4p] with |C n A_i| != 0 mod p for every family member,
// or an exhaustive failure report.
WitnessCReport witness_C(const SetFamily& family, long long p);

struct GalvinCertificate {
  bool certified = false;
  std::string refused_stage;
  long long p = 0;
  std::size_t family_size = 0;
  bool validity_assumed = false;
  unsigned long long validity_checked = 0;
  std::vector<int> witness_c;
  long long f_at_c = 0;  // F(v_C) mod p
  unsigned long long vanishing_checked = 0;
  std::optional<Monomial> y;
  long long y_degree = 0;
  long long bound = 0;        // = p when certified
  long long upper_bound = 0;  // |family| (a valid family shows m(p) <= that)
  bool regime_warning = false;  // p <= 3: outside the counting argument
};

// End-to-end certificate that any valid family needs at least p members:
// F = prod of the member linear forms vanishes on V([4p] choose 2p), is
// nonzero at the witness characteristic vector v_C, and the new standard
// monomial over the uniform ideal has degree >= p.
GalvinCertificate galvin_lower_certificate(const SetFamily& family, long long p,
                                           bool assume_valid = false);

}  // namespace gbx

#endif

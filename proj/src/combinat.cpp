#include "gbx/combinat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gbx {

namespace {

void require_prime(long long p) {
  if (!Fp::is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void validate_root_family(const RootVectorFamily& T) {
  require_prime(T.p);
  for (const auto& v : T.vectors) {
    if (static_cast<int>(v.size()) != T.nvars)
      throw std::invalid_argument("vector dimension mismatch");
    for (int e : v)
      if (e < 0 || e >= T.p) throw std::invalid_argument("exponent out of range [0, p)");
  }
}

// Fixed-width bitset over search targets.
class Bits {
 public:
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  std::size_t gain_over(const Bits& covered) const {  // |this \ covered|
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & ~covered.w_[i]));
    return c;
  }

  // first index not covered, or n on full coverage
  std::size_t first_unset() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const std::uint64_t inv = ~w_[i];
      if (inv != 0) {
        const std::size_t idx = (i << 6) + static_cast<std::size_t>(std::countr_zero(inv));
        return idx < n_ ? idx : n_;
      }
    }
    return n_;
  }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

// Exhaustive minimum-cover search: branch on the first uncovered target,
// trying every candidate that covers it; candidates already tried at a node
// are excluded from its later branches, so each family is visited once.
struct CoverSearch {
  const std::vector<Bits>& covers;
  std::size_t targets;
  unsigned long long nodes = 0;
  std::vector<std::size_t> chosen;

  bool solve(const Bits& covered, int slots, std::vector<char>& banned) {
    ++nodes;
    const std::size_t done = covered.count();
    if (done == targets) return true;
    if (slots == 0) return false;

    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < covers.size(); ++c)
      if (!banned[c]) best_gain = std::max(best_gain, covers[c].gain_over(covered));
    if (best_gain * static_cast<std::size_t>(slots) < targets - done) return false;

    const std::size_t t = covered.first_unset();
    std::vector<std::size_t> branch;
    for (std::size_t c = 0; c < covers.size(); ++c)
      if (!banned[c] && covers[c].test(t)) branch.push_back(c);

    for (std::size_t b = 0; b < branch.size(); ++b) {
      const std::size_t c = branch[b];
      Bits next = covered;
      next |= covers[c];
      if (solve(next, slots - 1, banned)) {
        chosen.push_back(c);
        for (std::size_t r = 0; r < b; ++r) banned[branch[r]] = 0;
        return true;
      }
      banned[c] = 1;
    }
    for (const std::size_t c : branch) banned[c] = 0;
    return false;
  }
};

std::uint64_t next_same_popcount(std::uint64_t mask) {  // Gosper
  const std::uint64_t lo = mask & (~mask + 1);
  const std::uint64_t r = mask + lo;
  return (((mask ^ r) >> 2) / lo) | r;
}

template <class F>
void for_each_subset(int ground, int k, F&& fn) {
  if (ground < 0 || ground >= 63 || k < 0 || k > ground)
    throw std::invalid_argument("subset enumeration out of range");
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << ground;
  for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;
       mask = next_same_popcount(mask))
    fn(mask);
}

mpz_class subset_count(int ground, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(ground), static_cast<unsigned long>(k));
  return r;
}

std::vector<int> mask_elements(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i + 1);
  return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_root_exponents(int n, long long p, std::size_t guard) {
  require_prime(p);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(p);
    if (total > guard) throw guard_error("enumeration guard exceeded: p^n too large");
  }
  std::vector<std::vector<int>> out;
  out.reserve(total);
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(e);
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == p - 1) {
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return out;
}

Cyclotomic root_dot(const std::vector<int>& a, const std::vector<int>& b, long long p) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  std::vector<Rational> powers(static_cast<std::size_t>(p), Rational());
  for (std::size_t i = 0; i < a.size(); ++i)
    powers[static_cast<std::size_t>((a[i] + b[i]) % p)] += Rational(1);
  return Cyclotomic::from_powers(p, powers);
}

long long product_class(const std::vector<int>& v, long long p) {
  long long s = 0;
  for (int e : v) s += e;
  return s % p;
}

std::vector<Cyclotomic> to_cyclotomic_point(const std::vector<int>& e, long long p) {
  std::vector<Cyclotomic> pt;
  pt.reserve(e.size());
  for (int x : e) pt.push_back(Cyclotomic::omega(p, x));
  return pt;
}

bool is_balancing_family(const RootVectorFamily& T, std::size_t guard) {
  validate_root_family(T);
  if (T.vectors.empty()) return false;
  for (const auto& w : enumerate_root_exponents(T.nvars, T.p, guard)) {
    bool covered = false;
    for (const auto& v : T.vectors)
      if (root_dot(v, w, T.p).is_zero()) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

KSearchReport brute_force_K(int n, long long p, int k_max, std::size_t guard) {
  require_prime(p);
  if (n < 1 || n % p != 0) throw std::invalid_argument("K(n,p) requires p | n");
  if (k_max < 0) throw std::invalid_argument("negative k_max");

  KSearchReport report;
  report.nvars = n;
  report.p = p;
  report.k_max = k_max;

  const auto vectors = enumerate_root_exponents(n, p, guard);
  const std::size_t total = vectors.size();
  std::vector<Bits> covers;
  covers.reserve(total);
  for (const auto& v : vectors) {
    Bits mask(total);
    for (std::size_t w = 0; w < total; ++w)
      if (root_dot(v, vectors[w], p).is_zero()) mask.set(w);
    covers.push_back(std::move(mask));
  }

  // Any balancing family maps to one containing (1,...,1) under coordinate
  // scalings, which preserve the balancing property; so member 0 can be
  // fixed.
  for (int k = 1; k <= k_max; ++k) {
    CoverSearch search{covers, total, 0, {}};
    std::vector<char> banned(total, 0);
    banned[0] = 1;  // already chosen
    const Bits& base = covers[0];
    if (search.solve(base, k - 1, banned)) {
      report.nodes += search.nodes;
      report.optimum = k;
      report.lower_bound = k;
      report.witness.push_back(vectors[0]);
      std::sort(search.chosen.begin(), search.chosen.end());
      for (std::size_t c : search.chosen) report.witness.push_back(vectors[c]);
      return report;
    }
    report.nodes += search.nodes;
    report.lower_bound = k + 1;
  }
  return report;
}

OrthoVerdict orthogonal_class_check(const std::vector<int>& y, const std::vector<int>& z,
                                    long long p) {
  require_prime(p);
  if (y.size() != z.size()) throw std::invalid_argument("vector dimension mismatch");
  const long long n = static_cast<long long>(y.size());
  if (n % p != 0 || (p == 2 && n % 4 != 0)) return OrthoVerdict::outside_regime;
  if (!root_dot(y, z, p).is_zero()) return OrthoVerdict::not_applicable;
  const long long i = product_class(y, p);
  const long long expected = (p - i) % p;
  return product_class(z, p) == expected ? OrthoVerdict::confirmed : OrthoVerdict::violated;
}

OrthoSweepReport orthogonal_class_sweep(int n, long long p, std::size_t guard) {
  OrthoSweepReport report;
  report.nvars = n;
  report.p = p;
  report.in_regime = (n % p == 0) && !(p == 2 && n % 4 != 0);
  const auto vectors = enumerate_root_exponents(n, p, guard);
  for (const auto& y : vectors)
    for (const auto& z : vectors) {
      ++report.pairs;
      const OrthoVerdict v = orthogonal_class_check(y, z, p);
      if (v == OrthoVerdict::confirmed || v == OrthoVerdict::violated) ++report.orthogonal_pairs;
      if (v == OrthoVerdict::violated) ++report.violations;
    }
  return report;
}

BalancingCertificate balancing_lower_certificate(const RootVectorFamily& T, std::size_t guard) {
  BalancingCertificate cert;
  cert.nvars = T.nvars;
  cert.p = T.p;
  cert.family_size = T.vectors.size();
  auto refuse = [&](const std::string& stage) {
    cert.certified = false;
    cert.refused_stage = stage;
    return cert;
  };

  validate_root_family(T);
  const int n = T.nvars;
  const long long p = T.p;
  if (n < 1 || n % p != 0 || T.vectors.empty()) return refuse("input");
  for (std::size_t i = 0; i < T.vectors.size(); ++i)
    for (std::size_t j = i + 1; j < T.vectors.size(); ++j)
      if (T.vectors[i] == T.vectors[j]) return refuse("input");
  cert.target = static_cast<long long>(n) * (p - 1);

  if (!is_balancing_family(T, guard)) return refuse("balancing");

  // Orthogonal mates of B_i lie in B_{a-i}, where w^a is the product of all
  // p-th roots of unity raised to n/p; a = 0 for odd p (the textbook map
  // B_i -> B_{p-i}), and a = n/2 mod 2 for p = 2.
  const long long a = (n * (p - 1) / 2) % p;
  const TermOrder order{OrderKind::deglex, n};
  const Cyclotomic zero(p);
  const long long becs = becs_bound(n, p).ceiling;

  for (long long i = 0; i < p; ++i) {
    std::vector<const std::vector<int>*> class_members;
    for (const auto& v : T.vectors)
      if (product_class(v, p) == i) class_members.push_back(&v);
    if (class_members.empty()) return refuse("partition");

    const long long vanish_j = ((a - i) % p + p) % p;

    Polynomial<Cyclotomic> product = Polynomial<Cyclotomic>::constant(n, zero.one_like());
    for (const auto* v : class_members) {
      Polynomial<Cyclotomic> linear(n, zero);
      for (int k = 1; k <= n; ++k)
        linear.add_term(Monomial::variable(n, k),
                        Cyclotomic::omega(p, (*v)[static_cast<std::size_t>(k - 1)]));
      product = product * linear;
    }

    long long qj = -1;
    for (long long j = 0; j < p; ++j)
      if (j != vanish_j) {
        qj = j;
        break;
      }
    std::vector<int> q_exps(static_cast<std::size_t>(n), 0);
    q_exps.back() = static_cast<int>(qj);

    const auto points = enumerate_B(n, p, vanish_j, guard);
    const auto basis = autoreduce(basis_root_of_unity(n, p, vanish_j, order, guard),
                                  VerifyInput::no);
    BalancingClassStep step{static_cast<int>(i), static_cast<int>(vanish_j),
                            class_members.size(), q_exps, Monomial::one(n), 0};
    try {
      const auto dc = certify_degree(product, basis, to_cyclotomic_point(q_exps, p), &points);
      if (!dc.alpha_y_nonzero) return refuse("certify");
      step.y = dc.y;
      step.degree_bound = dc.bound;
    } catch (const certify_error& e) {
      return refuse(e.stage);
    }
    if (step.degree_bound < becs) return refuse("bound");
    cert.total_bound += step.degree_bound;
    cert.steps.push_back(std::move(step));
  }

  if (cert.total_bound < cert.target) return refuse("total");
  cert.certified = true;
  return cert;
}

SetFamily SetFamily::from_lists(int ground, const std::vector<std::vector<int>>& lists) {
  if (ground < 1 || ground > 62) throw std::invalid_argument("ground size out of range");
  SetFamily f;
  f.ground = ground;
  for (const auto& list : lists) {
    std::uint64_t mask = 0;
    for (int e : list) {
      if (e < 1 || e > ground) throw std::invalid_argument("set element out of range");
      mask |= std::uint64_t{1} << (e - 1);
    }
    f.sets.push_back(mask);
  }
  return f;
}

std::vector<std::vector<int>> SetFamily::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (auto mask : sets) out.push_back(mask_elements(mask));
  return out;
}

SetFamily galvin_construction(int n) {
  if (n < 1 || 4 * n > 62) throw std::invalid_argument("n out of range");
  SetFamily f;
  f.ground = 4 * n;
  const std::uint64_t window = (std::uint64_t{1} << (2 * n)) - 1;
  for (int i = 1; i <= 2 * n; ++i) f.sets.push_back(window << (i - 1));
  return f;
}

bool is_galvin_family(const SetFamily& family, int n, std::size_t guard) {
  if (n < 1 || family.ground != 4 * n) return false;
  for (auto mask : family.sets)
    if (std::popcount(mask) != 2 * n) return false;
  if (family.sets.empty()) return false;
  if (subset_count(4 * n, 2 * n) > static_cast<long>(guard))
    throw guard_error("Galvin verification guard exceeded");
  bool ok = true;
  for_each_subset(4 * n, 2 * n, [&](std::uint64_t b) {
    if (!ok) return;
    for (auto a : family.sets)
      if (std::popcount(a & b) == n) return;
    ok = false;
  });
  return ok;
}

MSearchReport brute_force_m(int n) {
  if (n < 1) throw std::invalid_argument("n out of range");
  if (n > 2) throw guard_error("exact m(n) search guarded to n <= 2");

  MSearchReport report;
  report.n = n;

  std::vector<std::uint64_t> candidates;
  for_each_subset(4 * n, 2 * n, [&](std::uint64_t mask) { candidates.push_back(mask); });
  const std::size_t total = candidates.size();

  std::vector<Bits> covers;
  covers.reserve(total);
  for (std::uint64_t a : candidates) {
    Bits mask(total);
    for (std::size_t b = 0; b < total; ++b)
      if (std::popcount(a & candidates[b]) == n) mask.set(b);
    covers.push_back(std::move(mask));
  }

  for (int m = 1; m <= 2 * n; ++m) {
    CoverSearch search{covers, total, 0, {}};
    std::vector<char> banned(total, 0);
    if (search.solve(Bits(total), m, banned)) {
      report.nodes += search.nodes;
      report.optimum = m;
      report.lower_bound = m;
      std::sort(search.chosen.begin(), search.chosen.end());
      report.witness.ground = 4 * n;
      for (std::size_t c : search.chosen) report.witness.sets.push_back(candidates[c]);
      return report;
    }
    report.nodes += search.nodes;
    report.lower_bound = m + 1;
  }
  return report;
}

CountingReport counting_inequality(long long p) {
  require_prime(p);
  CountingReport report;
  report.p = p;
  mpz_class c2p;
  mpz_bin_uiui(c2p.get_mpz_t(), static_cast<unsigned long>(2 * p), static_cast<unsigned long>(p));
  mpz_bin_uiui(report.rhs.get_mpz_t(), static_cast<unsigned long>(4 * p),
               static_cast<unsigned long>(p));
  report.lhs = static_cast<long>(4 * p) * c2p;
  report.holds = report.lhs < report.rhs;
  report.ti_formula = 2 * c2p;
  if (p <= 3) {
    const std::uint64_t a = (std::uint64_t{1} << (2 * p)) - 1;  // A = {1..2p}
    unsigned long long count = 0;
    for_each_subset(static_cast<int>(4 * p), static_cast<int>(3 * p), [&](std::uint64_t t) {
      if (std::popcount(t & a) % p == 0) ++count;
    });
    report.ti_enumerated = count;
  }
  return report;
}

WitnessCReport witness_C(const SetFamily& family, long long p) {
  require_prime(p);
  if (family.ground != 4 * p) throw std::invalid_argument("ground set must be [4p]");
  WitnessCReport report;
  for_each_subset(static_cast<int>(4 * p), static_cast<int>(3 * p), [&](std::uint64_t c) {
    if (report.found) return;
    ++report.scanned;
    for (auto a : family.sets)
      if (std::popcount(a & c) % p == 0) return;
    report.found = true;
    report.c_mask = c;
    report.c_elements = mask_elements(c);
  });
  return report;
}

GalvinCertificate galvin_lower_certificate(const SetFamily& family, long long p,
                                           bool assume_valid) {
  GalvinCertificate cert;
  cert.p = p;
  cert.family_size = family.sets.size();
  cert.regime_warning = p <= 3;
  auto refuse = [&](const std::string& stage) {
    cert.certified = false;
    cert.refused_stage = stage;
    return cert;
  };

  if (!Fp::is_prime(p) || family.ground != 4 * p || family.sets.empty()) return refuse("input");
  for (auto mask : family.sets)
    if (std::popcount(mask) != 2 * p) return refuse("input");

  if (assume_valid) {
    cert.validity_assumed = true;
  } else {
    bool valid = true;
    unsigned long long checked = 0;
    for_each_subset(static_cast<int>(4 * p), static_cast<int>(2 * p), [&](std::uint64_t b) {
      if (!valid) return;
      ++checked;
      for (auto a : family.sets)
        if (std::popcount(a & b) == p) return;
      valid = false;
    });
    cert.validity_checked = checked;
    if (!valid) return refuse("validity");
  }

  const auto witness = witness_C(family, p);
  if (!witness.found) return refuse("witness");
  cert.witness_c = witness.c_elements;

  long long f_at_c = 1;
  for (auto a : family.sets)
    f_at_c = (f_at_c * (std::popcount(a & witness.c_mask) % p)) % p;
  cert.f_at_c = f_at_c;
  if (f_at_c == 0) return refuse("nonvanishing");

  // F(v_B) = prod |A_i n B| mod p over all 2p-subsets B.
  bool vanishes = true;
  unsigned long long checked = 0;
  for_each_subset(static_cast<int>(4 * p), static_cast<int>(2 * p), [&](std::uint64_t b) {
    if (!vanishes) return;
    ++checked;
    long long value = 1;
    for (auto a : family.sets) value = (value * (std::popcount(a & b) % p)) % p;
    if (value != 0) vanishes = false;
  });
  cert.vanishing_checked = checked;
  if (!vanishes) return refuse("vanishing");

  const Monomial y =
      uniform_new_standard_monomial_fp(static_cast<int>(4 * p), static_cast<int>(2 * p), p,
                                       witness.c_mask);
  cert.y = y;
  cert.y_degree = y.degree();
  if (cert.y_degree < p) return refuse("degree");

  cert.bound = p;
  cert.upper_bound = static_cast<long long>(cert.family_size);
  cert.certified = true;
  return cert;
}

}  // namespace gbx

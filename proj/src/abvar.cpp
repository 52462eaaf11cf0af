#include "hkv/abvar.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "hkv/error.hpp"

namespace hkv {

namespace {

constexpr Monomial bit(std::size_t i) { return Monomial{1} << i; }

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

int parity_sign(long n) { return n % 2 == 0 ? 1 : -1; }

void require_same(const AbelianRingPtr& a, const AbelianRingPtr& b) {
  if (a != b && !(*a == *b)) throw Error(ErrorKind::RingMismatch, "classes live on different abelian rings");
}

AbelianRingPtr sub_ring(const AbelianRingPtr& r, std::size_t first, std::size_t count) {
  const auto& roster = r->roster();
  return AbelianRing::make(r->dim(), {roster.begin() + static_cast<long>(first),
                                      roster.begin() + static_cast<long>(first + count)});
}

bool roster_matches(const AbelianRing& big, std::size_t offset, const AbelianRing& part) {
  if (big.dim() != part.dim() || offset + part.factors() > big.factors()) return false;
  for (std::size_t f = 0; f < part.factors(); ++f) {
    if (big.roster()[offset + f] != part.roster()[f]) return false;
  }
  return true;
}

// All masks with `count` bits inside the low n bits, ascending.
std::vector<Monomial> subsets_of_size(std::size_t n, int count) {
  std::vector<Monomial> out;
  for (Monomial m = 0; m < bit(n); ++m) {
    if (std::popcount(m) == count) out.push_back(m);
  }
  return out;
}

}  // namespace

AbelianRingPtr AbelianRing::make(int dim, std::vector<Factor> roster) {
  if (dim < 1) throw Error(ErrorKind::BadShape, "abelian dimension must be positive");
  if (roster.empty()) throw Error(ErrorKind::BadShape, "empty factor roster");
  if (roster.size() * static_cast<std::size_t>(2 * dim) > max_generators) {
    throw Error(ErrorKind::SizeLimitExceeded, "more than 64 exterior generators");
  }
  return AbelianRingPtr(new AbelianRing(dim, std::move(roster)));
}

std::uint64_t AbelianRing::top_mask() const noexcept {
  const auto n = generators();
  return n == 64 ? ~Monomial{0} : bit(n) - 1;
}

int AbelianRing::orientation() const noexcept {
  if (dim_ % 2 == 0) return 1;
  const auto duals = std::count(roster_.begin(), roster_.end(), Factor::Dual);
  return duals % 2 == 0 ? 1 : -1;
}

std::uint64_t AbelianRing::factor_mask(std::size_t f) const noexcept {
  const auto g = generators_per_factor();
  return (bit(g) - 1) << (g * f);
}

AbelianRingPtr product(const AbelianRingPtr& a, const AbelianRingPtr& b) {
  if (a->dim() != b->dim()) throw Error(ErrorKind::RosterMismatch, "factors of different dimension");
  auto roster = a->roster();
  roster.insert(roster.end(), b->roster().begin(), b->roster().end());
  return AbelianRing::make(a->dim(), std::move(roster));
}

ExtClass ExtClass::unit(AbelianRingPtr ring) { return monomial(std::move(ring), 0); }

ExtClass ExtClass::monomial(AbelianRingPtr ring, Monomial m, Rational coeff) {
  ExtClass x(std::move(ring));
  if ((m & ~x.ring_->top_mask()) != 0) throw Error(ErrorKind::BadShape, "monomial outside the generator range");
  x.add(m, coeff);
  return x;
}

ExtClass ExtClass::top(AbelianRingPtr ring) {
  const auto m = ring->top_mask();
  return monomial(std::move(ring), m);
}

Rational ExtClass::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExtClass::add(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool ExtClass::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_) {
    if (std::popcount(m) != degree) return false;
  }
  return true;
}

ExtClass& ExtClass::operator+=(const ExtClass& other) {
  require_same(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

ExtClass& ExtClass::operator-=(const ExtClass& other) {
  require_same(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

ExtClass& ExtClass::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const ExtClass& a, const ExtClass& b) { return *a.ring_ == *b.ring_ && a.terms_ == b.terms_; }

std::string ExtClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto g = ring_->generators_per_factor();
  for (const auto& [m, c] : terms_) {
    out << (first ? "" : " + ") << to_string(c);
    first = false;
    for (std::size_t i = 0; i < ring_->generators(); ++i) {
      if (m & bit(i)) out << (ring_->roster()[i / g] == Factor::Dual ? " f" : " e") << i / g << "." << i % g + 1;
    }
  }
  return out.str();
}

int shuffle_sign(Monomial s, Monomial t) noexcept {
  if (s & t) return 0;
  int inversions = 0;
  for (Monomial rest = t; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const Monomial above = i == 63 ? 0 : ~((bit(static_cast<std::size_t>(i)) << 1) - 1);
    inversions += std::popcount(s & above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int complement_sign(Monomial s, Monomial all) noexcept { return shuffle_sign(s, all & ~s); }

ExtClass wedge(const ExtClass& x, const ExtClass& y) {
  require_same(x.ring(), y.ring());
  ExtClass out(x.ring());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const int s = shuffle_sign(a, b);
      if (s != 0) out.add(a | b, s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
    }
  }
  return out;
}

Rational integrate_ab(const ExtClass& x) { return x.coefficient(x.ring()->top_mask()) * x.ring()->orientation(); }

ExtClass pullback(const ExtClass& x, const AbelianRingPtr& target, const std::vector<std::size_t>& image) {
  const auto& src = *x.ring();
  if (image.size() != src.factors() || src.dim() != target->dim()) {
    throw Error(ErrorKind::RosterMismatch, "pullback image does not match the source roster");
  }
  for (std::size_t j = 0; j < image.size(); ++j) {
    if (image[j] >= target->factors() || (j > 0 && image[j] <= image[j - 1]) ||
        target->roster()[image[j]] != src.roster()[j]) {
      throw Error(ErrorKind::RosterMismatch, "pullback image must be increasing and kind-preserving");
    }
  }
  const auto g = src.generators_per_factor();
  const Monomial block = bit(g) - 1;
  ExtClass out(target);
  for (const auto& [m, c] : x.terms()) {
    Monomial image_mask = 0;
    for (std::size_t j = 0; j < image.size(); ++j) image_mask |= ((m >> (g * j)) & block) << (g * image[j]);
    out.add(image_mask, c);
  }
  return out;
}

ExtClass tensor(const ExtClass& x, const ExtClass& y) {
  const auto ring = product(x.ring(), y.ring());
  const auto kx = x.ring()->factors();
  std::vector<std::size_t> left(kx), right(y.ring()->factors());
  for (std::size_t j = 0; j < kx; ++j) left[j] = j;
  for (std::size_t j = 0; j < right.size(); ++j) right[j] = kx + j;
  return wedge(pullback(x, ring, left), pullback(y, ring, right));
}

ExtClass swap_factors(const ExtClass& g, std::size_t source_factors) {
  const auto& ring = g.ring();
  if (source_factors == 0 || source_factors >= ring->factors()) {
    throw Error(ErrorKind::RosterMismatch, "swap needs two nonempty factor groups");
  }
  const auto target = product(sub_ring(ring, source_factors, ring->factors() - source_factors),
                              sub_ring(ring, 0, source_factors));
  const auto shift_x = ring->generators_per_factor() * source_factors;
  const auto shift_y = ring->generators_per_factor() * (ring->factors() - source_factors);
  const Monomial low = bit(shift_x) - 1;
  ExtClass out(target);
  for (const auto& [m, c] : g.terms()) {
    const Monomial a = m & low, b = m >> shift_x;
    const int s = parity_sign(static_cast<long>(std::popcount(a)) * std::popcount(b));
    out.add(b | (a << shift_y), s > 0 ? c : Rational(-c));
  }
  return out;
}

ExtClass ab_act(const ExtClass& g, const ExtClass& x) {
  const auto& gr = *g.ring();
  const auto& xr = *x.ring();
  if (!roster_matches(gr, 0, xr) || xr.factors() >= gr.factors()) {
    throw Error(ErrorKind::RosterMismatch, "the class does not live on the source of the correspondence");
  }
  const auto shift = xr.generators();
  const Monomial xtop = xr.top_mask();
  std::unordered_map<Monomial, std::vector<std::pair<Monomial, const Rational*>>> by_source;
  for (const auto& [m, c] : g.terms()) by_source[m & xtop].emplace_back(m >> shift, &c);

  ExtClass out(sub_ring(g.ring(), xr.factors(), gr.factors() - xr.factors()));
  for (const auto& [u, cu] : x.terms()) {
    const auto it = by_source.find(xtop & ~u);
    if (it == by_source.end()) continue;
    const int s = shuffle_sign(u, it->first) * xr.orientation();
    for (const auto& [b, cb] : it->second) out.add(b, s > 0 ? Rational(cu * *cb) : Rational(-cu * *cb));
  }
  return out;
}

ExtClass ab_compose(const ExtClass& first, const ExtClass& second, std::size_t middle_factors) {
  const auto& fr = first.ring();
  const auto& sr = second.ring();
  if (middle_factors == 0 || middle_factors >= fr->factors() || middle_factors >= sr->factors()) {
    throw Error(ErrorKind::RosterMismatch, "composition needs nonempty outer factors");
  }
  const auto kx = fr->factors() - middle_factors;
  const auto middle = sub_ring(fr, kx, middle_factors);
  if (!roster_matches(*sr, 0, *middle)) throw Error(ErrorKind::RosterMismatch, "middle factors do not agree");

  const auto target = product(sub_ring(fr, 0, kx), sub_ring(sr, middle_factors, sr->factors() - middle_factors));
  const auto shift_x = fr->generators_per_factor() * kx;
  const auto shift_y = middle->generators();
  const Monomial xlow = bit(shift_x) - 1;
  const Monomial ytop = middle->top_mask();

  std::unordered_map<Monomial, std::vector<std::pair<Monomial, const Rational*>>> by_head;
  for (const auto& [m, c] : second.terms()) by_head[m & ytop].emplace_back(m >> shift_y, &c);

  ExtClass out(target);
  for (const auto& [m, ca] : first.terms()) {
    const Monomial a = m & xlow, b = m >> shift_x;
    const auto it = by_head.find(ytop & ~b);
    if (it == by_head.end()) continue;
    const int s = shuffle_sign(b, it->first) * middle->orientation();
    for (const auto& [d, cd] : it->second) {
      const Rational v = ca * *cd;
      out.add(a | (d << shift_x), s > 0 ? v : Rational(-v));
    }
  }
  return out;
}

ExtClass ab_diagonal(const AbelianRingPtr& x) {
  // Dual basis of the top-degree pairing: Σ_S ε(S^c) e_S ⊗ e_{S^c}.
  const auto ring = product(x, x);
  const auto n = x->generators();
  const Monomial all = x->top_mask();
  ExtClass out(ring);
  for (Monomial s = 0; s <= all; ++s) {
    const Monomial rest = all & ~s;
    out.add(s | (rest << n), Rational(complement_sign(rest, all) * x->orientation()));
    if (s == all) break;
  }
  return out;
}

ExtClass poincare_class(int dim) {
  const auto ring = AbelianRing::make(dim, {Factor::Abelian, Factor::Dual});
  const auto g = ring->generators_per_factor();
  ExtClass out(ring);
  for (std::size_t k = 0; k < g; ++k) out.add(bit(k) | bit(g + k), 1);
  return out;
}

ExtClass poincare_power_closed_form(int dim, int p) {
  const auto ring = AbelianRing::make(dim, {Factor::Abelian, Factor::Dual});
  const auto g = ring->generators_per_factor();
  ExtClass out(ring);
  const Rational coeff = factorial(p) * parity_sign(static_cast<long>(p) * (p - 1) / 2);
  for (const auto k : subsets_of_size(g, p)) out.add(k | (k << g), coeff);
  return out;
}

namespace {

void check_diagonal_size(int dim, std::size_t m) {
  const auto n = static_cast<int>(2 * static_cast<std::size_t>(dim) * m);
  constexpr long budget = 200000;
  if (n > 64 || binomial(n, 2 * dim).get_num() > budget) {
    throw Error(ErrorKind::SizeLimitExceeded, "modified diagonal on A^" + std::to_string(m) + " with dim " +
                                                  std::to_string(dim) + " exceeds the monomial budget");
  }
}

}  // namespace

ExtClass small_diagonal(int dim, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadShape, "small diagonal needs at least one factor");
  check_diagonal_size(dim, n);
  const auto a = AbelianRing::make(dim, {Factor::Abelian});
  ExtClass current = ExtClass::unit(a);
  const auto diag = ab_diagonal(a);
  for (std::size_t k = 1; k < n; ++k) {
    const auto next = AbelianRing::make(dim, std::vector<Factor>(k + 1, Factor::Abelian));
    std::vector<std::size_t> head(k);
    for (std::size_t j = 0; j < k; ++j) head[j] = j;
    current = wedge(pullback(current, next, head), pullback(diag, next, {k - 1, k}));
  }
  return current;
}

ExtClass modified_diagonal(int dim, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::BadShape, "modified diagonal needs at least one factor");
  check_diagonal_size(dim, m);
  const auto ring = AbelianRing::make(dim, std::vector<Factor>(m, Factor::Abelian));
  std::vector<ExtClass> small;
  for (std::size_t n = 1; n <= m; ++n) small.push_back(small_diagonal(dim, n));
  ExtClass total(ring);
  for (Monomial subset = 1; subset < bit(m); ++subset) {
    std::vector<std::size_t> image;
    Monomial points = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (subset & bit(j)) image.push_back(j);
      else points |= ring->factor_mask(j);
    }
    auto term = wedge(pullback(small[image.size() - 1], ring, image), ExtClass::monomial(ring, points));
    total += term * Rational(parity_sign(static_cast<long>(m - image.size())));
  }
  return total;
}

namespace {

std::string prefix(int dim) { return "ab.d" + std::to_string(dim) + "."; }

// π^i as the Künneth component of the diagonal: terms with |S| = 2d − i.
ExtClass kunneth_component(const ExtClass& diag, const AbelianRing& base, int i) {
  ExtClass out(diag.ring());
  const auto low = base.top_mask();
  for (const auto& [m, c] : diag.terms()) {
    if (std::popcount(m & low) == 2 * base.dim() - i) out.add(m, c);
  }
  return out;
}

std::optional<Rational> multiple_of(const ExtClass& base, const ExtClass& x) {
  if (base.is_zero()) return std::nullopt;
  const auto& [m, c] = *base.terms().begin();
  const Rational lambda = x.coefficient(m) / c;
  if (x == base * lambda) return lambda;
  return std::nullopt;
}

}  // namespace

Report verify_poincare_projectors(int dim) {
  Report rep;
  Stopwatch sw;
  const auto pre = prefix(dim);
  const int top = 2 * dim;
  const auto a = AbelianRing::make(dim, {Factor::Abelian});
  const auto l = poincare_class(dim);

  std::vector<ExtClass> powers{ExtClass::unit(l.ring())};
  for (int p = 1; p <= top + 1; ++p) powers.push_back(wedge(powers.back(), l));
  std::size_t power_mismatch = 0;
  for (int p = 0; p <= top; ++p) power_mismatch += !(powers[static_cast<std::size_t>(p)] == poincare_power_closed_form(dim, p));
  rep.expect_zero(pre + "power.closed_form", "[L]^p = p! Σ_{|K|=p} e_K ⊗ e_K^∨ for p ≤ 2d", power_mismatch, sw);
  rep.expect_zero(pre + "power.truncation", "[L]^(2d+1) = 0", powers.back().size(), sw);
  powers.pop_back();

  // ε(K)ε(K^c) = (−1)^|K| and the action pattern of e_K ⊗ e_K^∨.
  const auto g = a->generators();
  const Monomial all = a->top_mask();
  const auto lring = l.ring();
  const auto dual = AbelianRing::make(dim, {Factor::Dual});
  std::size_t eps_bad = 0, act_bad = 0;
  for (Monomial k = 0; k <= all; ++k) {
    const Monomial kc = all & ~k;
    const int p = std::popcount(k);
    eps_bad += complement_sign(k, all) * complement_sign(kc, all) != parity_sign(p);
    const Rational rev = parity_sign(static_cast<long>(p) * (p - 1) / 2);
    const auto corr = ExtClass::monomial(lring, k | (k << g), rev);
    for (Monomial j = 0; j <= all; ++j) {
      const auto image = ab_act(corr, ExtClass::monomial(a, j));
      const auto expected = j == kc ? ExtClass::monomial(dual, k, rev * complement_sign(kc, all)) : ExtClass(dual);
      act_bad += !(image == expected);
      if (j == all) break;
    }
    if (k == all) break;
  }
  rep.expect_zero(pre + "eps.complement", "ε(K)ε(K^c) = (−1)^|K|", eps_bad, sw);
  rep.expect_zero(pre + "act.pattern", "(e_K⊗e_K^∨)_* e_J = ε(K^c) e_K^∨ if J = K^c, else 0", act_bad, sw);

  std::vector<ExtClass> hat;
  for (const auto& p : powers) hat.push_back(swap_factors(p, 1));
  const auto diag = ab_diagonal(a);
  std::size_t off = 0;
  std::vector<ExtClass> pi;
  for (int i = 0; i <= top; ++i) {
    const auto& forward = powers[static_cast<std::size_t>(top - i)];
    for (int j = 0; j <= top; ++j) {
      const auto comp = ab_compose(forward, hat[static_cast<std::size_t>(j)], 1);
      if (j != i) {
        off += comp.size();
        continue;
      }
      const auto kc = kunneth_component(diag, *a, i);
      const auto lambda = multiple_of(kc, comp);
      const Rational expected = factorial(i) * factorial(top - i) * parity_sign(i);
      rep.expect(pre + "table.i" + std::to_string(i), "[L̂]^i ∘ [L]^(2d−i) = (−1)^i i!(2d−i)! π^i",
                 lambda ? to_string(*lambda) : "not a multiple of π^i", to_string(expected), sw);
      pi.push_back(comp * (1 / expected));
    }
  }
  rep.expect_zero(pre + "table.off", "[L̂]^j ∘ [L]^(2d−i) = 0 for j ≠ i", off, sw);

  std::size_t idem = 0, orth = 0, degree = 0;
  ExtClass sum(diag.ring());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    sum += pi[i];
    idem += (ab_compose(pi[i], pi[i], 1) - pi[i]).size();
    for (std::size_t j = 0; j < pi.size(); ++j) {
      if (i != j) orth += ab_compose(pi[i], pi[j], 1).size();
    }
    for (Monomial m = 0; m <= all; ++m) {
      const auto x = ExtClass::monomial(a, m);
      const auto y = ab_act(pi[i], x);
      degree += !(static_cast<std::size_t>(std::popcount(m)) == i ? y == x : y.is_zero());
      if (m == all) break;
    }
  }
  rep.expect_zero(pre + "pi.idempotent", "π^i ∘ π^i = π^i", idem, sw);
  rep.expect_zero(pre + "pi.orthogonal", "π^i ∘ π^j = 0 for i ≠ j", orth, sw);
  rep.expect_zero(pre + "pi.sum", "Σ π^i = Δ_A", (sum - diag).size(), sw);
  rep.expect_zero(pre + "pi.degree", "π^i is the identity on ⋀^i and zero elsewhere", degree, sw);
  return rep;
}

Report verify_ab_mck(int dim) {
  Report rep;
  Stopwatch sw;
  const auto pre = prefix(dim);
  const int top = 2 * dim;
  const auto l = poincare_class(dim);
  std::vector<ExtClass> powers{ExtClass::unit(l.ring())};
  for (int p = 1; p <= top; ++p) powers.push_back(wedge(powers.back(), l));
  std::vector<ExtClass> hat;
  for (const auto& p : powers) hat.push_back(swap_factors(p, 1));

  const auto dual = AbelianRing::make(dim, {Factor::Dual});
  const Monomial all = dual->top_mask();
  // images[p][α] = ([L̂]^p)_* e_α
  std::vector<std::vector<ExtClass>> images(hat.size());
  for (std::size_t p = 0; p < hat.size(); ++p) {
    for (Monomial m = 0; m <= all; ++m) {
      images[p].push_back(ab_act(hat[p], ExtClass::monomial(dual, m)));
      if (m == all) break;
    }
  }
  std::size_t forbidden = 0, violations = 0, admissible = 0, silent_admissible = 0;
  bool control = false;
  for (int t = 0; t <= top; ++t) {
    for (int p = 0; p <= top; ++p) {
      for (int q = 0; q <= top; ++q) {
        const bool ok = t + p + q == top;
        ok ? ++admissible : ++forbidden;
        std::size_t nonzero = 0;
        for (const auto& u : images[static_cast<std::size_t>(p)]) {
          if (u.is_zero()) continue;
          for (const auto& v : images[static_cast<std::size_t>(q)]) {
            if (v.is_zero()) continue;
            nonzero += !ab_act(powers[static_cast<std::size_t>(t)], wedge(u, v)).is_zero();
          }
        }
        if (ok) {
          silent_admissible += nonzero == 0;
          if (t == 0 && p == dim && q == dim) control = nonzero > 0;
        } else {
          violations += nonzero;
        }
      }
    }
  }
  std::ostringstream anchor;
  anchor << "[L]^t ∘ Δ123 ∘ ([L̂]^p × [L̂]^q) = 0 for t+p+q != 2d (" << forbidden << " triples)";
  rep.expect(pre + "mck.forbidden", anchor.str(), std::to_string(violations), "0", sw);
  rep.expect(pre + "mck.control", "admissible triple (0,d,d) is nonzero on some pair", control ? "nonzero" : "zero",
             "nonzero", sw);
  rep.expect(pre + "mck.admissible", "admissible triples that vanish on every pair (of " + std::to_string(admissible) + ")",
             std::to_string(silent_admissible), "0", sw);
  return rep;
}

Report verify_moddiag(int dim) {
  Report rep;
  Stopwatch sw;
  const auto pre = prefix(dim);
  const auto m = static_cast<std::size_t>(2 * dim + 1);
  const auto total = modified_diagonal(dim, m);
  rep.expect(pre + "moddiag.vanishing", "[Δ_tot^(2d+1)] = 0 on A^(2d+1)", std::to_string(total.size()), "0", sw);

  const auto diag2 = small_diagonal(dim, 2);
  const auto a = AbelianRing::make(dim, {Factor::Abelian});
  rep.expect(pre + "moddiag.small2", "small diagonal on A^2 equals Δ_A", diag2 == ab_diagonal(a) ? "true" : "false",
             "true", sw);

  if (dim >= 2) {
    const auto tot3 = modified_diagonal(dim, 3);
    const auto g = a->generators();
    const auto a2 = AbelianRing::make(dim, {Factor::Abelian, Factor::Abelian});
    const auto x = ExtClass::monomial(a2, bit(0) | bit(g + 1));
    const auto image = ab_act(tot3, x);
    const auto expected = ExtClass::monomial(a, bit(0) | bit(1));
    rep.expect(pre + "moddiag.control", "(Δ_tot^3)_*(e1 × e2) = e1 ∧ e2 ≠ 0", image.str(), expected.str(), sw);
  }
  return rep;
}

Report binomial_vanishing(int max_m) {
  if (max_m < 2) throw Error(ErrorKind::BadShape, "max_m must be at least 2");
  Report rep;
  Stopwatch sw;
  std::size_t pairs = 0, nonzero = 0;
  for (int m = 2; m <= max_m; ++m) {
    for (int n = 1; n < m; ++n) {
      Rational sum = 0;
      for (int r = m - n; r <= m; ++r) sum += binomial(n, m - r) * parity_sign(m - r);
      ++pairs;
      nonzero += sgn(sum) != 0;
    }
  }
  rep.expect("ab.binomial", "Σ_{r=m−n}^m (−1)^(m−r) C(n, m−r) = 0 for 1 ≤ n < m ≤ " + std::to_string(max_m) + " (" +
                                std::to_string(pairs) + " pairs)",
             std::to_string(nonzero), "0", sw);
  return rep;
}

}  // namespace hkv

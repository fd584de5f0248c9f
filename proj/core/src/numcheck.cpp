#include "periods/numcheck.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include <boost/math/constants/constants.hpp>

#include "periods/integrator.hpp"

namespace periods::numcheck {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::cosh;
using boost::multiprecision::exp;
using boost::multiprecision::sinh;
using boost::multiprecision::sqrt;

const Float128 kPi = boost::math::constants::pi<Float128>();

Float128 ipow(Float128 b, int e) {
  if (e < 0) return 1 / ipow(b, -e);
  Float128 r = 1;
  for (; e > 0; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

std::string fmt(const Float128& v, int digits = 30) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::scientific << v;
  return os.str();
}

Float128 pairwise_sum(const std::vector<Float128>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    Float128 s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

Float128 pairwise_sum(const std::vector<Float128>& v) { return v.empty() ? Float128(0) : pairwise_sum(v, 0, v.size()); }

/// Runs body(i) for i in [0, count) on a few threads; results must be written by index.
template <class F>
void parallel_for(std::size_t count, F body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 16);
  if (workers <= 1 || count < 4) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

struct Node {
  Float128 x, xc, w;
};

/// Tanh-sinh nodes on [0, 1] with step h = 2^-level.
std::vector<Node> tanh_sinh_nodes(int level) {
  const Float128 h = Float128(1) / Float128(1 << level);
  std::vector<Node> nodes;
  for (int k = 0;; ++k) {
    bool any = false;
    for (int sgn : {1, -1}) {
      if (k == 0 && sgn < 0) continue;
      const Float128 t = h * k * sgn;
      const Float128 u = kPi / 2 * sinh(t);
      const Float128 e = exp(-2 * abs(u));
      // x for u > 0 is 1/(1+e), its complement e/(1+e).
      Float128 small = e / (1 + e), large = 1 / (1 + e);
      Float128 w = h * kPi / 2 * cosh(t) * 4 * e / ((1 + e) * (1 + e)) / 2;
      if (w < Float128("1e-50") || small == 0) continue;
      any = true;
      nodes.push_back(u >= 0 ? Node{large, small, w} : Node{small, large, w});
    }
    if (!any && k > 0) break;
  }
  return nodes;
}

Float128 tensor_sum(int ell, const Integrand& f, const std::vector<Node>& nodes) {
  // One partial sum per outer node keeps the result independent of the thread count.
  std::vector<Float128> outer(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i0) {
    Point p;
    p.x.assign(ell, 0);
    p.xc.assign(ell, 0);
    p.x[0] = nodes[i0].x;
    p.xc[0] = nodes[i0].xc;
    std::vector<Float128> acc;
    auto rec = [&](auto&& self, int dim, Float128 w) -> void {
      if (dim == ell) {
        acc.push_back(w * f(p));
        return;
      }
      for (const auto& nd : nodes) {
        p.x[dim] = nd.x;
        p.xc[dim] = nd.xc;
        self(self, dim + 1, w * nd.w);
      }
    };
    rec(rec, 1, nodes[i0].w);
    outer[i0] = pairwise_sum(acc);
  });
  return pairwise_sum(outer);
}

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

const char* method_name(Method m) { return m == Method::TanhSinhTensor ? "TANH_SINH_TENSOR" : "MONTE_CARLO"; }

Float128 Point::one_minus(int i, int j) const {
  // 1 - P x = (1 - P) + P (1 - x)
  Float128 prod = x[i - 1], comp = xc[i - 1];
  for (int v = i + 1; v <= j; ++v) {
    comp = comp + prod * xc[v - 1];
    prod *= x[v - 1];
  }
  return comp;
}

std::string QuadratureReport::str() const {
  std::ostringstream os;
  os << estimate << " +- " << error_bound << " (" << method_name(method) << ", " << nodes << " nodes";
  if (method == Method::MonteCarlo) os << ", seed " << seed;
  os << ")";
  return os.str();
}

QuadratureReport tanh_sinh(int ell, const Integrand& f, const Options& opt) {
  if (ell < 1) throw Error(ErrorCode::InvalidInput, "quadrature needs at least one variable");
  const Float128 target = ipow(Float128(10), -opt.target_digits);
  QuadratureReport rep;
  rep.method = Method::TanhSinhTensor;
  rep.converged = false;
  // Errors roughly square per halving of h, so e_L ~ d_L^2 / d_{L-1} with d_L = |I_L - I_{L-1}|.
  std::vector<Float128> values, diffs;
  for (int level = 1; level <= 12; ++level) {
    auto nodes = tanh_sinh_nodes(level);
    double count = std::pow(static_cast<double>(nodes.size()), ell);
    if (count > static_cast<double>(opt.node_budget)) break;
    Float128 cur = tensor_sum(ell, f, nodes);
    rep.nodes += static_cast<std::uint64_t>(count);
    rep.value = cur;
    const Float128 floor = Float128("1e-30") * std::max<Float128>(1, abs(cur));
    if (!values.empty()) diffs.push_back(abs(cur - values.back()));
    values.push_back(cur);
    if (diffs.empty()) {
      rep.bound = std::max<Float128>(abs(cur), floor);
      continue;
    }
    Float128 d = diffs.back();
    Float128 est = d;
    if (diffs.size() >= 2 && diffs[diffs.size() - 2] > d) est = std::min(d, d * d / diffs[diffs.size() - 2]);
    rep.bound = std::max(est, floor);
    if (diffs.size() >= 2 && rep.bound <= target) {
      rep.converged = true;
      break;
    }
  }
  rep.estimate = fmt(rep.value);
  rep.error_bound = fmt(rep.bound, 3);
  if (!rep.converged)
    throw BudgetExceeded("tanh-sinh did not reach 1e-" + std::to_string(opt.target_digits) +
                             " within the node budget; best " + rep.str(),
                         rep);
  return rep;
}

QuadratureReport monte_carlo(int ell, const Integrand& f, const Options& opt) {
  if (ell < 1) throw Error(ErrorCode::InvalidInput, "quadrature needs at least one variable");
  const int per_dim = ell <= 2 ? 32 : ell == 3 ? 16 : ell == 4 ? 8 : 4;
  std::size_t strata = 1;
  for (int i = 0; i < ell; ++i) strata *= per_dim;
  const std::uint64_t per = std::max<std::uint64_t>(2, opt.samples / strata);
  std::vector<Float128> means(strata), vars(strata);
  parallel_for(strata, [&](std::size_t s) {
    std::mt19937_64 rng(splitmix(opt.seed ^ splitmix(s)));
    std::vector<int> cell(ell);
    for (int d = 0, r = static_cast<int>(s); d < ell; ++d, r /= per_dim) cell[d] = r % per_dim;
    Point p;
    p.x.assign(ell, 0);
    p.xc.assign(ell, 0);
    std::vector<Float128> vals(per);
    for (std::uint64_t k = 0; k < per; ++k) {
      Float128 jac = 1;
      for (int d = 0; d < ell; ++d) {
        const double r = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        const Float128 u = (Float128(cell[d]) + Float128(r)) / per_dim;
        const Float128 uc = (Float128(per_dim - cell[d] - 1) + Float128(1 - r)) / per_dim;
        // x = u^3 (10 - 15u + 6u^2); 1 - x is the same polynomial in 1 - u. The cubic
        // contact at both ends keeps the variance finite at corners where several atoms vanish.
        p.x[d] = u * u * u * (10 - 15 * u + 6 * u * u);
        p.xc[d] = uc * uc * uc * (10 - 15 * uc + 6 * uc * uc);
        jac *= 30 * u * u * uc * uc;
      }
      vals[k] = jac * f(p);
    }
    Float128 mean = pairwise_sum(vals) / Float128(per);
    std::vector<Float128> dev(per);
    for (std::uint64_t k = 0; k < per; ++k) dev[k] = (vals[k] - mean) * (vals[k] - mean);
    means[s] = mean;
    vars[s] = pairwise_sum(dev) / Float128(per - 1);
  });
  QuadratureReport rep;
  rep.method = Method::MonteCarlo;
  rep.seed = opt.seed;
  rep.nodes = per * strata;
  rep.value = pairwise_sum(means) / Float128(strata);
  Float128 var = pairwise_sum(vars) / (Float128(per) * Float128(strata) * Float128(strata));
  rep.bound = 3 * sqrt(var);
  rep.estimate = fmt(rep.value, 12);
  rep.error_bound = fmt(rep.bound, 3);
  return rep;
}

QuadratureReport numeric_integrate(int ell, const Integrand& f, const Options& opt) {
  if (ell < 1 || ell > polylog::kMaxEll) throw Error(ErrorCode::InvalidInput, "quadrature supports 1..5 variables");
  return ell <= 3 ? tanh_sinh(ell, f, opt) : monte_carlo(ell, f, opt);
}

QuadratureReport numeric_integrate(const dihedral::CubicalIntegrand& c, const Options& opt) {
  const AtomProduct p = c.atom_product();
  const Float128 coeff = to_real<Float128>(p.coeff);
  auto f = [&](const Point& pt) {
    Float128 v = coeff;
    for (const auto& [var, e] : p.x) v *= ipow(pt.x[var - 1], e);
    for (const auto& [ij, e] : p.atoms) v *= ipow(pt.one_minus(ij.first, ij.second), e);
    return v;
  };
  return numeric_integrate(c.ell(), f, opt);
}

QuadratureReport numeric_integrate(const polylog::PolylogExpr& e, const Options& opt) {
  auto f = [&](const Point& pt) { return e.eval<Float128>(pt.x, 113); };
  return numeric_integrate(e.ell(), f, opt);
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  os << "symbolic " << symbolic.str() << " = " << symbolic_value << "\nnumeric  " << numeric.str() << "\ndelta    "
     << delta << "\n" << (pass ? "PASS" : "FAIL");
  return os.str();
}

VerifyReport compare(const mzv::MzvCombination& symbolic, const QuadratureReport& q) {
  VerifyReport r;
  r.symbolic = symbolic;
  r.numeric = q;
  const Float128 s = from_big<Float128>(mzv::eval_big(symbolic, 40));
  r.symbolic_value = fmt(s);
  const Float128 d = abs(s - q.value);
  r.delta = fmt(d, 3);
  r.pass = d <= q.bound;
  return r;
}

VerifyReport verify(const dihedral::DihedralMonomial& m, int digits, const Options& opt) {
  mzv::MzvCombination sym = integrator::integrate_cell(m, integrator::Options{false}).value;
  Options o = opt;
  o.target_digits = digits;
  return compare(sym, numeric_integrate(dihedral::monomial_to_cubical(m), o));
}

}  // namespace periods::numcheck

#include "jonq/unipotent_slice.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "jonq/errors.hpp"
#include "jonq/linalg.hpp"

namespace jonq {

namespace {

RatFunc x_of(std::size_t i) { return RatFunc::variable(Var::x(static_cast<std::uint32_t>(i))); }
const RatFunc& u_var() {
  static const RatFunc u = RatFunc::variable(Var::u());
  return u;
}

}  // namespace

bool AdditiveFlow::is_trivial() const {
  return std::all_of(F.begin(), F.end(), [](const RatFunc& f) { return f.is_zero(); });
}

Substitution flow_substitution(const AdditiveFlow& flow, const RatFunc& value) {
  Substitution sigma;
  const Substitution at{{Var::u(), value}};
  for (std::size_t i = 1; i <= flow.n; ++i) {
    const RatFunc& f = flow.F[i - 1];
    if (f.is_zero()) continue;
    sigma.emplace(Var::x(static_cast<std::uint32_t>(i)), x_of(i) + substitute(f, at));
  }
  return sigma;
}

RatFunc apply_flow(const AdditiveFlow& flow, const RatFunc& f, const RatFunc& value) {
  return substitute(f, flow_substitution(flow, value));
}

const AdditiveFlow& validate_flow(const AdditiveFlow& flow) {
  if (flow.F.size() != flow.n) throw ValidationError("flow has " + std::to_string(flow.F.size()) + " increments for n = " + std::to_string(flow.n));
  for (std::size_t i = 1; i <= flow.n; ++i) {
    const RatFunc& f = flow.F[i - 1];
    const std::string idx = std::to_string(i);
    for (Var v : f.variables()) {
      if (v.is_parameter() ? v != Var::u() : v.index() > flow.n)
        throw ValidationError("F_" + idx + " involves " + v.name(), i);
    }
    if (!depends_only_on(f, FlagIndex{static_cast<std::uint32_t>(i)}))
      throw ValidationError("F_" + idx + " not in K_" + idx, i);
    try {
      if (!substitute(f, {{Var::u(), RatFunc(0)}}).is_zero()) throw ValidationError("F(0) != 0 at index " + idx, i);
    } catch (const UndefinedError&) {
      throw ValidationError("F_" + idx + " undefined at u = 0", i);
    }
  }
  // F_i(x, u) + F_i(x + F(x, u), v) = F_i(x, u + v)
  Substitution shifted;
  for (std::size_t i = 1; i <= flow.n; ++i)
    if (!flow.F[i - 1].is_zero()) shifted.emplace(Var::x(static_cast<std::uint32_t>(i)), x_of(i) + flow.F[i - 1]);
  shifted.emplace(Var::u(), RatFunc::variable(Var::v()));
  const Substitution sum{{Var::u(), u_var() + RatFunc::variable(Var::v())}};
  for (std::size_t i = 1; i <= flow.n; ++i) {
    const RatFunc& f = flow.F[i - 1];
    if (f.is_zero()) continue;
    bool ok = false;
    try {
      ok = f + substitute(f, shifted) == substitute(f, sum);
    } catch (const UndefinedError&) {
    }
    if (!ok) throw ValidationError("group law fails at index " + std::to_string(i), i);
  }
  return flow;
}

SlopeData extract_slope(const AdditiveFlow& flow) {
  std::size_t d = flow.n;
  while (d > 0 && flow.F[d - 1].is_zero()) --d;
  if (d == 0) throw DegenerateError("identity flow has no slope");
  const RatFunc& fd = flow.F[d - 1];
  RatFunc s = substitute(fd, {{Var::u(), RatFunc(1)}});
  if (s.is_zero() || !(fd == u_var() * s)) throw ValidationError("not additive at index " + std::to_string(d), d);
  return SlopeData{d, std::move(s)};
}

SliceStep slice_step(std::span<const AdditiveFlow> flows, std::size_t pivot, const Rational& c) {
  if (pivot >= flows.size()) throw std::invalid_argument("slice_step: pivot out of range");
  const AdditiveFlow& P = flows[pivot];
  if (P.is_trivial()) throw DegenerateError("pivot flow trivial");
  SliceStep step;
  step.slope = extract_slope(P);
  const std::size_t n = P.n;
  const std::size_t d = step.slope.d;
  const Var xd = Var::x(static_cast<std::uint32_t>(d));
  const Substitution on_slice{{xd, RatFunc(c)}};

  Substitution relabel;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == d) continue;
    step.kept.push_back(j);
    relabel.emplace(Var::x(static_cast<std::uint32_t>(j)), x_of(step.kept.size()));
  }

  const std::string degenerate = "degenerate constant c = " + to_string(c);
  try {
    // u0 carries x_d to c along the pivot flow.
    const RatFunc u0 = (RatFunc(c) - RatFunc::variable(xd)) / step.slope.s;
    const Substitution to_slice = flow_substitution(P, u0);
    for (std::size_t j : step.kept) step.pullbacks.push_back(substitute(x_of(j), to_slice));

    for (std::size_t q = 0; q < flows.size(); ++q) {
      if (q == pivot) continue;
      const AdditiveFlow& Q = flows[q];
      if (Q.n != n) throw std::invalid_argument("slice_step: flows differ in dimension");
      AdditiveFlow induced = AdditiveFlow::trivial(n - 1);
      if (!Q.is_trivial()) {
        const Substitution moved = flow_substitution(Q, u_var());
        for (std::size_t p = 0; p < step.kept.size(); ++p) {
          const RatFunc image = substitute(substitute(step.pullbacks[p], moved), on_slice);
          induced.F[p] = substitute(image - x_of(step.kept[p]), relabel);
        }
      }
      validate_flow(induced);
      step.induced.push_back(std::move(induced));
    }
  } catch (const UndefinedError&) {
    throw DegenerateError(degenerate);
  } catch (const std::invalid_argument& e) {
    // zero denominators from canonicalize
    if (dynamic_cast<const ValidationError*>(&e)) throw;
    throw DegenerateError(degenerate);
  }
  return step;
}

std::string describe_subspace(const SliceResult& r) {
  if (r.indices.empty()) return "whole space";
  std::string out;
  for (std::size_t k = 0; k < r.indices.size(); ++k) {
    if (k) out += ", ";
    out += "x" + std::to_string(r.indices[k]) + " = " + to_string(r.constants[k]);
  }
  return out;
}

std::vector<Rational> default_candidates() { return {0, 1, -1, 2, -2, 3}; }

SliceResult slice_chain(std::span<const AdditiveFlow> flows, std::span<const Rational> candidates) {
  if (flows.empty()) throw std::invalid_argument("slice_chain: no flows");
  const std::size_t n = flows.front().n;
  for (const auto& f : flows) {
    if (f.n != n) throw std::invalid_argument("slice_chain: flows differ in dimension");
    validate_flow(f);
  }

  std::vector<AdditiveFlow> current(flows.begin(), flows.end());
  std::vector<std::size_t> original(n);  // current coordinate -> original index
  std::iota(original.begin(), original.end(), 1);
  std::vector<RatFunc> hat;              // current coordinate in original variables
  for (std::size_t i = 1; i <= n; ++i) hat.push_back(x_of(i));
  std::vector<std::pair<std::size_t, Rational>> fixed;

  while (true) {
    const auto it = std::find_if(current.begin(), current.end(), [](const AdditiveFlow& f) { return !f.is_trivial(); });
    if (it == current.end()) break;
    const std::size_t pivot = static_cast<std::size_t>(it - current.begin());
    const std::size_t d = extract_slope(*it).d;
    std::optional<std::pair<SliceStep, Rational>> done;
    for (const Rational& c : candidates) {
      try {
        done.emplace(slice_step(current, pivot, c), c);
        break;
      } catch (const DegenerateError&) {
      }
    }
    if (!done) throw DegenerateError("candidates exhausted at level " + std::to_string(original[d - 1]));
    auto& [step, c] = *done;

    Substitution to_original;
    for (std::size_t i = 0; i < hat.size(); ++i) to_original.emplace(Var::x(static_cast<std::uint32_t>(i + 1)), hat[i]);
    std::vector<RatFunc> next_hat;
    std::vector<std::size_t> next_original;
    for (std::size_t p = 0; p < step.kept.size(); ++p) {
      next_hat.push_back(substitute(step.pullbacks[p], to_original));
      next_original.push_back(original[step.kept[p] - 1]);
    }
    fixed.emplace_back(original[d - 1], c);
    hat = std::move(next_hat);
    original = std::move(next_original);
    current = std::move(step.induced);
  }

  std::sort(fixed.begin(), fixed.end());
  SliceResult result;
  result.n = n;
  for (auto& [i, c] : fixed) {
    result.indices.push_back(i);
    result.constants.push_back(c);
  }
  result.invariants = std::move(hat);
  for (const auto& inv : result.invariants)
    for (const auto& f : flows)
      if (!(apply_flow(f, inv, u_var()) == inv)) throw std::logic_error("slice invariant not fixed by an input flow");
  return result;
}

std::size_t generic_orbit_dimension(std::span<const AdditiveFlow> flows) {
  DenseMatrix<RatFunc> velocity;
  const Substitution at_zero{{Var::u(), RatFunc(0)}};
  for (const auto& f : flows) {
    std::vector<RatFunc> row;
    for (const auto& fi : f.F) row.push_back(substitute(derivative(fi, Var::u()), at_zero));
    velocity.push_back(std::move(row));
  }
  return velocity.empty() ? 0 : rank(velocity);
}

bool verify_cross_section(std::span<const AdditiveFlow> flows, const SliceResult& result) {
  if (flows.empty()) return false;
  const std::size_t n = flows.front().n;
  if (result.indices.size() != result.constants.size()) return false;
  if (!std::is_sorted(result.indices.begin(), result.indices.end())) return false;
  std::vector<std::size_t> free;
  Substitution restrict_to;
  for (std::size_t i = 1, k = 0; i <= n; ++i) {
    if (k < result.indices.size() && result.indices[k] == i) {
      restrict_to.emplace(Var::x(static_cast<std::uint32_t>(i)), RatFunc(result.constants[k]));
      ++k;
    } else {
      free.push_back(i);
    }
  }
  if (restrict_to.size() != result.indices.size() || free.size() != result.invariants.size()) return false;
  try {
    for (std::size_t j = 0; j < free.size(); ++j) {
      const RatFunc& inv = result.invariants[j];
      for (const auto& f : flows)
        if (!(apply_flow(f, inv, u_var()) == inv)) return false;
      if (!(substitute(inv, restrict_to) == x_of(free[j]))) return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return result.indices.size() == generic_orbit_dimension(flows);
}

// ---------------------------------------------------------------------------

NilpotentAlgebra::NilpotentAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

std::size_t NilpotentAlgebra::slot(std::size_t i, std::size_t j, std::size_t k) const {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw ValidationError("structure constant index out of range");
  return ((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1);
}

void NilpotentAlgebra::set(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  if (i == j) {
    if (c != 0) throw ValidationError("structure constants not strictly triangular: [e_i, e_i] != 0", i);
    return;
  }
  if (i < j) c_[slot(i, j, k)] = c;
  else c_[slot(j, i, k)] = -c;
}

Rational NilpotentAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  return i < j ? c_[slot(i, j, k)] : Rational(-c_[slot(j, i, k)]);
}

void NilpotentAlgebra::validate() const {
  for (std::size_t i = 1; i <= dim_; ++i)
    for (std::size_t j = i + 1; j <= dim_; ++j)
      for (std::size_t k = 1; k <= j; ++k)
        if (constant(i, j, k) != 0)
          throw ValidationError("structure constants not strictly triangular at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) + ")");
  // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0, coefficient of e_m
  for (std::size_t a = 1; a <= dim_; ++a)
    for (std::size_t b = a + 1; b <= dim_; ++b)
      for (std::size_t c = b + 1; c <= dim_; ++c)
        for (std::size_t m = 1; m <= dim_; ++m) {
          Rational s = 0;
          for (std::size_t l = 1; l <= dim_; ++l)
            s += constant(b, c, l) * constant(a, l, m) + constant(c, a, l) * constant(b, l, m) +
                 constant(a, b, l) * constant(c, l, m);
          if (s != 0) throw ValidationError("Jacobi identity violated");
        }
}

std::vector<AdditiveFlow> coadjoint_flows(const NilpotentAlgebra& g) {
  g.validate();
  const std::size_t n = g.dim();
  std::vector<AdditiveFlow> flows;
  for (std::size_t e = 1; e <= n; ++e) {
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t l = 1; l <= n; ++l) A[k - 1][l - 1] = g.constant(e, k, l);
    // exp(uA) - I = sum_{p>=1} u^p A^p / p!, finite since A is nilpotent.
    AdditiveFlow flow = AdditiveFlow::trivial(n);
    std::vector<std::vector<Rational>> power = A;
    Rational factorial = 1;
    for (std::size_t p = 1; p <= n; ++p) {
      factorial *= static_cast<long>(p);
      const RatFunc up = u_var().pow(static_cast<long>(p)) / RatFunc(factorial);
      bool nonzero = false;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (power[k][l] != 0) {
            nonzero = true;
            flow.F[k] += up * RatFunc(power[k][l]) * x_of(l + 1);
          }
      if (!nonzero) break;
      std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
          if (power[k][m] != 0)
            for (std::size_t l = 0; l < n; ++l) next[k][l] += power[k][m] * A[m][l];
      power = std::move(next);
    }
    validate_flow(flow);
    flows.push_back(std::move(flow));
  }
  return flows;
}

}  // namespace jonq

#include "dpdp/cost.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace dpdp {

const char* to_string(Shape s) { return s == Shape::Convex ? "convex" : "concave"; }

CostModel::CostModel(Shape shape, Index n, WFn w, EFn f)
    : shape_(shape), n_(n), w_(std::move(w)), f_(std::move(f)) {
  if (!w_) throw std::invalid_argument("CostModel: w evaluator required");
}

CostModel with_offsets(const CostModel& base, std::vector<Cost> offsets) {
  if (static_cast<Index>(offsets.size()) != base.size() + 1) {
    throw std::invalid_argument("with_offsets: need n+1 offsets");
  }
  auto off = std::make_shared<std::vector<Cost>>(std::move(offsets));
  CostModel inner = base;
  return CostModel(
      base.shape(), base.size(),
      [inner](Index j, Index i) { return inner.w(j, i); },
      [inner, off](Cost d, Index j) { return add_cost(inner.e(d, j), (*off)[j]); });
}

namespace {

std::vector<Cost> integer_sqrt_table(Index n, Cost scale) {
  // g[L] = floor(scale * sqrt(L)), computed exactly: isqrt(scale^2 * L).
  std::vector<Cost> g(static_cast<std::size_t>(n) + 1);
  for (Index l = 0; l <= n; ++l) {
#ifdef DPDP_COST_DOUBLE
    g[l] = std::floor(scale * std::sqrt(static_cast<double>(l)));
#else
    unsigned __int128 x = static_cast<unsigned __int128>(scale) * static_cast<unsigned __int128>(scale) *
                          static_cast<unsigned __int128>(l);
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (static_cast<unsigned __int128>(r) * r > x) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
    g[l] = static_cast<Cost>(r);
#endif
  }
  return g;
}

}  // namespace

PrefixSumCost::PrefixSumCost(std::vector<Cost> positions, Cost fixed_cost,
                             CostVariant variant, Cost sqrt_scale)
    : positions_(std::move(positions)), fixed_cost_(fixed_cost), variant_(variant) {
  for (std::size_t v = 1; v < positions_.size(); ++v) {
    if (positions_[v - 1] >= positions_[v]) {
      throw std::invalid_argument("PrefixSumCost: positions must be strictly sorted");
    }
  }
  prefix_.resize(positions_.size() + 1, 0);
  for (std::size_t v = 0; v < positions_.size(); ++v) {
    prefix_[v + 1] = prefix_[v] + positions_[v];
  }
  if (variant_ == CostVariant::SqrtLength) {
    sqrt_table_ = integer_sqrt_table(size(), sqrt_scale);
  }
}

Shape PrefixSumCost::shape() const {
  return variant_ == CostVariant::SqrtLength ? Shape::Concave : Shape::Convex;
}

Cost PrefixSumCost::w(Index j, Index i) const {
  if (j < 0 || j >= i || i > size()) {
    throw std::invalid_argument("PrefixSumCost::w: need 0 <= j < i <= n");
  }
  const Index len = i - j;
  switch (variant_) {
    case CostVariant::SquaredLength:
      return fixed_cost_ + len * len;
    case CostVariant::SqrtLength:
      return fixed_cost_ * len + sqrt_table_[len];
    case CostVariant::MedianDistance: {
      // villages j+1..i are positions_[j..i-1]; lower median
      const Index med = j + (len + 1) / 2;  // 1-based village index
      const Cost xm = positions_[med - 1];
      const Cost left = xm * (med - j) - (prefix_[med] - prefix_[j]);
      const Cost right = (prefix_[i] - prefix_[med]) - xm * (i - med);
      return fixed_cost_ + left + right;
    }
  }
  throw std::logic_error("PrefixSumCost::w: unknown variant");
}

CostModel make_post_office_cost(std::vector<Cost> positions, Cost fixed_cost,
                                CostVariant variant, Cost sqrt_scale) {
  auto cost = std::make_shared<PrefixSumCost>(std::move(positions), fixed_cost, variant, sqrt_scale);
  const Shape shape = cost->shape();
  const Index n = cost->size();
  return CostModel(shape, n, [cost](Index j, Index i) { return cost->w(j, i); });
}

namespace {

bool quad_ok(const CostModel& m, Index a, Index b, Index c, Index d) {
  const Cost lhs = add_cost(m.w(a, c), m.w(b, d));
  const Cost rhs = add_cost(m.w(b, c), m.w(a, d));
  return m.shape() == Shape::Convex ? lhs <= rhs : lhs >= rhs;
}

}  // namespace

MongeCheckResult monge_check(const CostModel& model, Index samples, std::uint64_t seed) {
  const Index n = model.size();
  if (n < 4) return {};  // vacuously ok
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> dist(0, n);
  for (Index s = 0; s < samples; ++s) {
    std::array<Index, 4> q;
    do {
      for (auto& x : q) x = dist(rng);
      std::sort(q.begin(), q.end());
    } while (q[0] == q[1] || q[1] == q[2] || q[2] == q[3]);
    if (!quad_ok(model, q[0], q[1], q[2], q[3])) return {false, q};
  }
  return {};
}

MongeCheckResult monge_check_exhaustive(const CostModel& model) {
  const Index n = model.size();
  for (Index a = 0; a + 3 <= n; ++a)
    for (Index b = a + 1; b + 2 <= n; ++b)
      for (Index c = b + 1; c + 1 <= n; ++c)
        for (Index d = c + 1; d <= n; ++d)
          if (!quad_ok(model, a, b, c, d)) return {false, {a, b, c, d}};
  return {};
}

CostModel parse_cost_spec(const std::string& spec, std::vector<Cost> positions) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  Cost c = 0;
  Cost k = Cost{1} << 20;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      const std::string kv = rest.substr(pos, comma - pos);
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("cost spec: expected key=value in '" + spec + "'");
      const std::string key = kv.substr(0, eq);
      const long long value = std::stoll(kv.substr(eq + 1));
      if (key == "C") {
        c = static_cast<Cost>(value);
      } else if (key == "K") {
        k = static_cast<Cost>(value);
      } else {
        throw std::invalid_argument("cost spec: unknown key '" + key + "'");
      }
      pos = comma + 1;
    }
  }
  if (name == "quad") return make_post_office_cost(std::move(positions), c, CostVariant::SquaredLength);
  if (name == "median") return make_post_office_cost(std::move(positions), c, CostVariant::MedianDistance);
  if (name == "sqrt") return make_post_office_cost(std::move(positions), c, CostVariant::SqrtLength, k);
  throw std::invalid_argument("cost spec: unknown family '" + name + "'");
}

}  // namespace dpdp

#include "acre/quadrature.hpp"

#include <stdexcept>

namespace acre {
namespace {

template <unsigned N>
RuleNodes make_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  RuleNodes r;
  const auto& x = G::abscissa();
  const auto& w = G::weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      r.x.push_back(0.0);
      r.w.push_back(w[i]);
      continue;
    }
    r.x.push_back(-x[i]);
    r.w.push_back(w[i]);
    r.x.push_back(x[i]);
    r.w.push_back(w[i]);
  }
  return r;
}

}  // namespace

const RuleNodes& gauss_legendre_rule(int n) {
  static const RuleNodes r10 = make_rule<10>();
  static const RuleNodes r16 = make_rule<16>();
  static const RuleNodes r20 = make_rule<20>();
  static const RuleNodes r30 = make_rule<30>();
  static const RuleNodes r40 = make_rule<40>();
  switch (n) {
    case 10: return r10;
    case 16: return r16;
    case 20: return r20;
    case 30: return r30;
    case 40: return r40;
    default: throw std::invalid_argument("unsupported Gauss-Legendre order");
  }
}

}  // namespace acre

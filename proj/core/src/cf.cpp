#include "gcf/cf.hpp"

#include <json.hpp>

#include <stdexcept>

namespace gcf {

rational eval_finite(const std::vector<std::pair<rational, rational>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("eval_finite: empty list");
  rational x = pairs.back().first;
  for (size_t i = pairs.size() - 1; i-- > 0;) {
    if (x.is_zero()) throw zero_tail_denominator(static_cast<long>(i) + 2);
    x = pairs[i].first + pairs[i].second / x;
  }
  return x;
}

std::vector<std::pair<rational, rational>> instantiate(const cf_spec& spec, long K) {
  if (K < 1) throw std::invalid_argument("instantiate: K must be >= 1");
  std::vector<std::pair<rational, rational>> out;
  out.reserve(static_cast<size_t>(K));
  for (long n = 1; n <= K; ++n) out.emplace_back(spec.a.eval(n), spec.b.eval(n));
  return out;
}

std::vector<convergent_pair> pq_convergents(const cf_spec& spec, long M) {
  if (M < 0) throw std::invalid_argument("pq_convergents: M must be >= 0");
  std::vector<convergent_pair> out;
  out.reserve(static_cast<size_t>(M) + 1);
  rational p0 = spec.a.eval(1);
  rational q0(1);
  out.push_back({0, p0, q0});
  if (M == 0) return out;
  rational a2 = spec.a.eval(2);
  rational p1 = p0 * a2 + spec.b.eval(1);
  rational q1 = a2;
  out.push_back({1, p1, q1});
  for (long m = 2; m <= M; ++m) {
    rational an = spec.a.eval(m + 1);
    rational bn = spec.b.eval(m);
    rational p2 = an * p1 + bn * p0;
    rational q2 = an * q1 + bn * q0;
    out.push_back({m, p2, q2});
    p0 = std::move(p1); p1 = std::move(p2);
    q0 = std::move(q1); q1 = std::move(q2);
  }
  return out;
}

namespace {

nlohmann::json coeffs_to_json(const std::vector<rational>& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : c) arr.push_back(x.to_string());
  return arr;
}

std::vector<rational> coeffs_from_json(const nlohmann::json& arr) {
  std::vector<rational> out;
  for (const auto& v : arr) out.push_back(rational::from_string(v.get<std::string>()));
  return out;
}

}  // namespace

std::string cf_spec::to_json() const {
  nlohmann::json j;
  j["a"] = coeffs_to_json(a.num());
  j["b"] = coeffs_to_json(b.num());
  if (a.has_den()) j["a_den"] = coeffs_to_json(a.den());
  if (b.has_den()) j["b_den"] = coeffs_to_json(b.den());
  return j.dump();
}

cf_spec cf_spec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<rational> a_num = coeffs_from_json(j.at("a"));
  std::vector<rational> b_num = coeffs_from_json(j.at("b"));
  std::vector<rational> a_den, b_den;
  if (j.contains("a_den")) a_den = coeffs_from_json(j["a_den"]);
  if (j.contains("b_den")) b_den = coeffs_from_json(j["b_den"]);
  return cf_spec{poly_seq(std::move(a_num), std::move(a_den)),
                 poly_seq(std::move(b_num), std::move(b_den))};
}

}  // namespace gcf

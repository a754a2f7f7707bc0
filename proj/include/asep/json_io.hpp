#ifndef ASEP_JSON_IO_HPP
#define ASEP_JSON_IO_HPP

#include <asep/motzkin.hpp>
#include <asep/polynomial.hpp>
#include <asep/rational.hpp>

#include <json.hpp>

#include <string>

namespace asep {

using json = nlohmann::json;

// Rationals serialize as canonical "p/q" strings ("p" when q = 1, sign on
// the numerator); Gaussian rationals as {"re","im"} objects; polynomials as
// {"var", "coeffs"} with ascending coefficients.

inline json to_json(const Rational& x) { return x.str(); }

inline json to_json(const GaussianRational& x) {
    return json{{"re", x.re().str()}, {"im", x.im().str()}};
}

template <Field F>
json poly_to_json(const Poly<F>& p, const std::string& var = "xi") {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    if (p.is_zero()) coeffs.push_back(to_json(F(0)));
    return json{{"var", var}, {"coeffs", coeffs}};
}

inline Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

inline json path_to_json(const MotzkinPath& path) {
    json arr = json::array();
    for (Step s : path) arr.push_back(std::string(1, step_char(s)));
    return arr;
}

} // namespace asep

#endif // ASEP_JSON_IO_HPP

#ifndef ZTK_SERIALIZE_HPP
#define ZTK_SERIALIZE_HPP

#include <json.hpp>

#include "ztk/bernoulli.hpp"
#include "ztk/characters.hpp"
#include "ztk/padic.hpp"
#include "ztk/series.hpp"
#include "ztk/zetavalues.hpp"

namespace ztk {

using json = nlohmann::json;

inline json to_json(const Rational& r)
{
    return to_string(r);
}

inline Rational rational_from_json(const json& j)
{
    return rational_from_string(j.get<std::string>());
}

inline json to_json(const TruncatedSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coefficients())
        coeffs.push_back(to_string(c));
    return json{{"leadingExponent", s.leading_exponent()}, {"coefficients", coeffs}};
}

inline TruncatedSeries series_from_json(const json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coefficients"))
        coeffs.push_back(rational_from_string(c.get<std::string>()));
    return TruncatedSeries(j.at("leadingExponent").get<long>(), std::move(coeffs));
}

inline json to_json(const DirichletCharacter& chi)
{
    json values = json::array();
    for (long v : chi.table()) {
        if (v < 0)
            values.push_back(nullptr);
        else
            values.push_back(v);
    }
    return json{{"modulus", chi.modulus()}, {"order", chi.order()}, {"values", values}};
}

inline DirichletCharacter character_from_json(const json& j)
{
    std::vector<long> values;
    for (const auto& v : j.at("values"))
        values.push_back(v.is_null() ? -1 : v.get<long>());
    return make_character(j.at("modulus").get<unsigned long>(),
                          j.at("order").get<unsigned long>(), values);
}

inline json to_json(const CongruenceReport& r)
{
    return json{{"modulus", r.modulus.get_str()},
                {"lhs", r.lhs.get_str()},
                {"rhs", r.rhs.get_str()},
                {"holds", r.holds}};
}

inline json to_json(const PiPower& z)
{
    return json{{"coefficient", to_string(z.coefficient)}, {"piExponent", z.pi_exponent}};
}

inline PiPower pipower_from_json(const json& j)
{
    return {rational_from_string(j.at("coefficient").get<std::string>()),
            j.at("piExponent").get<unsigned>()};
}

inline json to_json(const PAdic& x)
{
    json j{{"p", x.prime()}};
    if (x.is_zero()) {
        j["valuation"] = nullptr;
        j["digits"] = json::array();
        j["precision"] = x.known_exponent();
    } else {
        j["valuation"] = x.valuation();
        j["digits"] = x.digits();
        j["precision"] = x.precision();
    }
    return j;
}

inline PAdic padic_from_json(const json& j)
{
    unsigned long p = j.at("p").get<unsigned long>();
    if (j.at("valuation").is_null())
        return PAdic::zero(p, j.at("precision").get<long>());
    Integer unit(0);
    Integer scale(1);
    for (const auto& d : j.at("digits")) {
        unit += scale * static_cast<long>(d.get<unsigned long>());
        scale *= static_cast<long>(p);
    }
    return PAdic(p, j.at("valuation").get<long>(), unit, j.at("precision").get<long>());
}

} // namespace ztk

#endif

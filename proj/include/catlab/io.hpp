#pragma once

// JSON and TSV serialization for dens, nests, Laurent coefficients and
// Schur expansions.

#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "catlab/dens.hpp"
#include "catlab/exactnum.hpp"

namespace catlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "catalanimal-lab/1";

inline Json big_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

inline Json to_json(const QtLaurent& f) {
  Json a = Json::array();
  for (const auto& term : f.terms()) a.push_back({{"q", term.q}, {"t", term.t}, {"c", big_to_json(term.c)}});
  return a;
}

inline Json to_json(const SchurPoly& f) {
  Json a = Json::array();
  for (const auto& [lam, c] : f.coeffs) a.push_back({{"lambda", lam}, {"coeff", to_json(c)}});
  return a;
}

inline std::string rational_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt d(s.substr(slash + 1));
    if (d == 0) throw InputError("zero denominator");
    return Rational(BigInt(s.substr(0, slash)), d);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed rational: " + s);
  }
}

inline Json eps_real_to_json(const EpsReal& x) {
  Json j{{"r", rational_string(x.std_part())}};
  if (denominator(x.eps_part()) == 1) j["eps"] = static_cast<long long>(numerator(x.eps_part()));
  else j["eps"] = rational_string(x.eps_part());
  return j;
}

inline EpsReal eps_real_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r")) throw InputError("expected {\"r\": ..., \"eps\": ...}");
  auto part = [](const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw InputError("expected an integer or a rational string");
  };
  return EpsReal(part(j.at("r")), j.contains("eps") ? part(j.at("eps")) : Rational(0));
}

inline Json den_to_json(const Den& D) {
  return Json{{"h", D.h}, {"p", eps_real_to_json(D.p)}, {"d", D.d}, {"e", D.e}};
}

inline Den den_from_json(const Json& j) {
  try {
    Den D;
    D.h = j.at("h").get<int>();
    D.p = eps_real_from_json(j.at("p"));
    D.d = j.at("d").get<std::vector<int>>();
    D.e = j.at("e").get<std::vector<int>>();
    return D;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed den: ") + e.what());
  }
}

inline Json nest_to_json(const Nest& N) { return Json{{"lambdas", N.lambdas}}; }

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

// 64-bit FNV-1a, hex.
inline std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline std::string partition_tsv(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s.empty() ? "0" : s;
}

// One "lambda<TAB>coefficient" line per Schur term.
inline std::string schur_tsv(const SchurPoly& f) {
  std::string out;
  for (const auto& [lam, c] : f.coeffs) out += partition_tsv(lam) + "\t" + c.to_string() + "\n";
  return out;
}

}  // namespace catlab

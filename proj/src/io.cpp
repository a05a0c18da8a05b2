#include "icube4/io.hpp"

#include <cctype>
#include <cstdlib>

namespace icube4 {

std::string to_text(const Quat& q) {
  if (q.is_zero()) return "0";
  std::string out;
  const char* letters = "1ijk";
  for (int c = 0; c < 4; ++c) {
    const i64 d = q.doubled()[c];
    if (d == 0) continue;
    if (d > 0 && !out.empty()) out += '+';
    if (d == -2 && c > 0) {
      out += '-';
    } else if (d != 2 || c == 0) {
      if (d % 2 == 0)
        out += std::to_string(d / 2);
      else
        out += std::to_string(d) + "/2";
    }
    if (c > 0) out += letters[c];
  }
  return out;
}

Quat quat_from_text(std::string_view s) {
  std::array<i64, 4> doubled{0, 0, 0, 0};
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_space();
  require(pos < s.size(), Errc::parse_error, "empty quaternion literal");
  bool first = true;
  while (pos < s.size()) {
    skip_space();
    if (pos >= s.size()) break;
    i64 sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
      skip_space();
    } else {
      require(first, Errc::parse_error, "expected '+' or '-' between terms");
    }
    first = false;

    bool have_digits = false;
    i64 numer = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      have_digits = true;
      numer = checked_add(checked_mul(numer, 10), s[pos] - '0');
      ++pos;
    }
    i64 denom = 1;
    if (pos < s.size() && s[pos] == '/') {
      require(have_digits, Errc::parse_error, "fraction without numerator");
      ++pos;
      require(pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])),
              Errc::parse_error, "fraction without denominator");
      denom = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        denom = checked_add(checked_mul(denom, 10), s[pos] - '0');
        ++pos;
      }
      require(denom == 1 || denom == 2, Errc::parse_error, "denominator must be 1 or 2");
    }

    int unit = 0;  // 0 = real term
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      unit = (s[pos] == 'i') ? 1 : (s[pos] == 'j') ? 2 : 3;
      ++pos;
    }
    require(have_digits || unit != 0, Errc::parse_error, "term without coefficient or unit");
    if (!have_digits) numer = 1;

    // Accumulate in doubled coordinates: value is sign * numer / denom.
    i64 add = (denom == 2) ? checked_mul(sign, numer) : checked_mul(sign, checked_mul(2, numer));
    doubled[unit] = checked_add(doubled[unit], add);
  }
  return Quat::from_doubled(doubled);
}

Json to_json(const Quat& q) {
  return Json{{"d", q.doubled()}};
}

Quat quat_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j["d"].is_array() && j["d"].size() == 4,
          Errc::parse_error, "quaternion JSON must be {\"d\":[d1,di,dj,dk]}");
  std::array<i64, 4> d;
  for (int c = 0; c < 4; ++c) {
    require(j["d"][c].is_number_integer(), Errc::parse_error,
            "doubled coefficients must be integers");
    d[c] = j["d"][c].get<i64>();
  }
  return Quat::from_doubled(d);
}

Json to_json(const ICube& c) {
  Json j;
  j["v"] = 1;
  j["n"] = c.dim();
  j["m"] = c.size();
  j["vectors"] = c.vectors;
  return j;
}

ICube icube_from_json(const Json& j) {
  require(j.is_object() && j.contains("vectors") && j["vectors"].is_array(), Errc::parse_error,
          "icube JSON must carry a \"vectors\" array");
  if (j.contains("v"))
    require(j["v"].is_number_integer() && j["v"].get<i64>() == 1, Errc::parse_error,
            "unsupported format version");
  ICube c;
  for (const auto& row : j["vectors"]) {
    require(row.is_array(), Errc::parse_error, "vectors must be arrays of integers");
    IVec v;
    for (const auto& x : row) {
      require(x.is_number_integer(), Errc::parse_error, "vector entries must be integers");
      v.push_back(x.get<i64>());
    }
    c.vectors.push_back(std::move(v));
  }
  if (j.contains("m"))
    require(j["m"].is_number_integer() && j["m"].get<i64>() == c.size(), Errc::parse_error,
            "m does not match the vector count");
  if (j.contains("n"))
    require(j["n"].is_number_integer() && j["n"].get<i64>() == c.dim(), Errc::parse_error,
            "n does not match the vector dimension");
  return c;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["v"] = 1;
  j["dyadic_power"] = d.dyadic_power;
  j["eta"] = d.eta ? to_json(*d.eta) : Json(nullptr);
  std::string perm;
  for (KElem g : d.coord_perm.image) perm += kelem_char(g);
  j["coord_perm"] = perm;
  j["scalar_content"] = d.scalar_content;
  j["gamma"] = to_json(d.gamma);
  j["delta"] = to_json(d.delta);
  j["signs"] = d.signs;
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  require(j.is_object(), Errc::parse_error, "decomposition JSON must be an object");
  if (j.contains("v"))
    require(j["v"].is_number_integer() && j["v"].get<i64>() == 1, Errc::parse_error,
            "unsupported format version");
  Decomposition d;
  require(j.contains("dyadic_power") && j["dyadic_power"].is_number_integer(), Errc::parse_error,
          "missing dyadic_power");
  d.dyadic_power = j["dyadic_power"].get<int>();
  if (j.contains("eta") && !j["eta"].is_null()) d.eta = quat_from_json(j["eta"]);
  require(j.contains("coord_perm") && j["coord_perm"].is_string(), Errc::parse_error,
          "missing coord_perm");
  const std::string perm = j["coord_perm"].get<std::string>();
  require(perm.size() == 4, Errc::parse_error, "coord_perm must name four letters");
  for (int g = 0; g < 4; ++g) {
    auto e = kelem_from_char(perm[g]);
    require(e.has_value(), Errc::parse_error, "coord_perm letters must be 1, i, j, k");
    d.coord_perm.image[g] = *e;
  }
  require(d.coord_perm.is_valid(), Errc::parse_error, "coord_perm must be a permutation");
  require(j.contains("scalar_content") && j["scalar_content"].is_number_integer(),
          Errc::parse_error, "missing scalar_content");
  d.scalar_content = j["scalar_content"].get<i64>();
  require(j.contains("gamma") && j.contains("delta"), Errc::parse_error,
          "missing gamma or delta");
  d.gamma = quat_from_json(j["gamma"]);
  d.delta = quat_from_json(j["delta"]);
  require(j.contains("signs") && j["signs"].is_array(), Errc::parse_error, "missing signs");
  for (const auto& s : j["signs"]) {
    require(s.is_number_integer(), Errc::parse_error, "signs must be integers");
    d.signs.push_back(s.get<int>());
  }
  return d;
}

Json to_json(const CountReport& r) {
  Json j;
  j["N"] = r.N;
  j["m"] = r.m;
  j["closed"] = r.closed;
  j["convolution"] = r.convolution ? Json(*r.convolution) : Json(nullptr);
  if (r.brute) j["brute"] = *r.brute;
  j["ok"] = r.ok;
  return j;
}

}  // namespace icube4

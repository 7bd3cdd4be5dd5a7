#include "fuzzy/serialization.hpp"

#include "json.hpp"

#include "fuzzy/errors.hpp"
#include "fuzzy/json_value.hpp"

namespace fuzzy {

using nlohmann::json;
using detail::ProfileNode;
using Kind = ProfileFunction::Kind;

namespace {

ProfileFunction node_fn(ProfileNode n) {
  return ProfileFunction(std::make_shared<const ProfileNode>(std::move(n)));
}

}  // namespace

json profile_to_json_value(const ProfileFunction& p) {
  const ProfileNode& n = p.node();
  switch (n.kind) {
    case Kind::constant:
      return {{"kind", "constant"}, {"value", n.value}};
    case Kind::polynomial:
      return {{"kind", "polynomial"}, {"coeffs", n.coeffs}};
    case Kind::piecewise_polynomial:
      return {{"kind", "piecewise"}, {"breaks", n.breaks}, {"pieces", n.pieces},
              {"below", n.below}, {"above", n.above}};
    case Kind::composed:
      return {{"kind", "composed"},
              {"outer", profile_to_json_value(n.children[0])},
              {"inner", profile_to_json_value(n.children[1])}};
    case Kind::sum:
      return {{"kind", "sum"},
              {"terms", {profile_to_json_value(n.children[0]), profile_to_json_value(n.children[1])}}};
    case Kind::product:
      return {{"kind", "product"},
              {"factors", {profile_to_json_value(n.children[0]), profile_to_json_value(n.children[1])}}};
    case Kind::cosine:
      return {{"kind", "cos"}, {"arg", profile_to_json_value(n.children[0])}};
    case Kind::sine:
      return {{"kind", "sin"}, {"arg", profile_to_json_value(n.children[0])}};
    case Kind::reciprocal:
      return {{"kind", "reciprocal"}, {"arg", profile_to_json_value(n.children[0])}};
    case Kind::step:
      return {{"kind", "step"}, {"at", n.value}, {"below", n.below}, {"above", n.above}};
    case Kind::select:
      return {{"kind", "select"},
              {"split", n.value},
              {"left", profile_to_json_value(n.children[0])},
              {"right", profile_to_json_value(n.children[1])}};
    case Kind::callable:
      throw CapabilityError("callable profile '" + n.label + "' is not serializable");
  }
  throw CapabilityError("unknown profile kind");
}

ProfileFunction profile_from_json_value(const json& j) {
  if (j.is_number()) return ProfileFunction(j.get<double>());
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("profile must be a number or an object with 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  try {
    ProfileNode n;
    if (kind == "constant") return ProfileFunction(j.at("value").get<double>());
    if (kind == "affine") return ProfileFunction::affine(j.at("slope").get<double>(), j.at("intercept").get<double>());
    if (kind == "spline_h") return spline_h();
    if (kind == "polynomial") {
      auto c = j.at("coeffs").get<std::vector<double>>();
      if (c.size() <= 1) return ProfileFunction::polynomial(std::move(c));
      n.kind = Kind::polynomial;
      n.coeffs = std::move(c);
      return node_fn(std::move(n));
    }
    if (kind == "piecewise") {
      auto base = ProfileFunction::piecewise(j.at("breaks").get<std::vector<double>>(),
                                             j.at("pieces").get<std::vector<std::vector<double>>>());
      n = base.node();
      n.below = j.value("below", n.below);
      n.above = j.value("above", n.above);
      return node_fn(std::move(n));
    }
    if (kind == "cubic_spline") {
      return ProfileFunction::clamped_spline(j.at("x").get<std::vector<double>>(), j.at("y").get<std::vector<double>>(),
                                             j.value("slope_left", 0.0), j.value("slope_right", 0.0));
    }
    if (kind == "composed") {
      n.kind = Kind::composed;
      n.children = {profile_from_json_value(j.at("outer")), profile_from_json_value(j.at("inner"))};
      return node_fn(std::move(n));
    }
    if (kind == "sum" || kind == "product") {
      const auto& arr = j.at(kind == "sum" ? "terms" : "factors");
      if (!arr.is_array() || arr.empty()) throw ConfigError(kind + " needs a non-empty list");
      ProfileFunction acc = profile_from_json_value(arr[0]);
      for (std::size_t i = 1; i < arr.size(); ++i) {
        ProfileNode m;
        m.kind = kind == "sum" ? Kind::sum : Kind::product;
        m.children = {acc, profile_from_json_value(arr[i])};
        acc = node_fn(std::move(m));
      }
      return acc;
    }
    if (kind == "cos" || kind == "sin" || kind == "reciprocal") {
      n.kind = kind == "cos" ? Kind::cosine : kind == "sin" ? Kind::sine : Kind::reciprocal;
      n.children = {profile_from_json_value(j.at("arg"))};
      return node_fn(std::move(n));
    }
    if (kind == "step")
      return ProfileFunction::step(j.at("at").get<double>(), j.at("below").get<double>(), j.at("above").get<double>());
    if (kind == "select")
      return ProfileFunction::select(j.at("split").get<double>(), profile_from_json_value(j.at("left")),
                                     profile_from_json_value(j.at("right")));
  } catch (const json::exception& e) {
    throw ConfigError("malformed profile '" + kind + "': " + e.what());
  }
  throw ConfigError("unknown profile kind '" + kind + "'");
}

json fourier_to_json_value(const FourierFunction& f) {
  json modes = json::array();
  for (const auto& [n, c] : f.coefficients())
    modes.push_back({{"n", n}, {"re", profile_to_json_value(c.re())}, {"im", profile_to_json_value(c.im())}});
  return {{"interval", {f.interval().lo, f.interval().hi}}, {"modes", modes}};
}

FourierFunction fourier_from_json_value(const json& j) {
  try {
    const auto iv = j.at("interval").get<std::vector<double>>();
    if (iv.size() != 2) throw ConfigError("interval must have two entries");
    FourierFunction::Table t;
    for (const auto& m : j.at("modes")) {
      ComplexProfile c(m.contains("re") ? profile_from_json_value(m.at("re")) : ProfileFunction(),
                       m.contains("im") ? profile_from_json_value(m.at("im")) : ProfileFunction());
      const int n = m.at("n").get<int>();
      if (t.count(n)) throw ConfigError("duplicate mode " + std::to_string(n));
      t.emplace(n, std::move(c));
    }
    return {make_interval(iv[0], iv[1]), std::move(t)};
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed Fourier function: ") + e.what());
  }
}

json matrix_fourier_to_json_value(const MatrixFourierFunction& f) {
  json entries = json::array();
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b) entries.push_back(fourier_to_json_value(f(a, b)));
  return {{"size", f.size()}, {"entries", entries}};
}

MatrixFourierFunction matrix_fourier_from_json_value(const json& j) {
  try {
    const int s = j.at("size").get<int>();
    std::vector<FourierFunction> e;
    for (const auto& x : j.at("entries")) e.push_back(fourier_from_json_value(x));
    return {s, std::move(e)};
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed matrix Fourier function: ") + e.what());
  }
}

std::string to_json(const ProfileFunction& p) { return profile_to_json_value(p).dump(); }
std::string to_json(const FourierFunction& f) { return fourier_to_json_value(f).dump(); }
std::string to_json(const MatrixFourierFunction& f) { return matrix_fourier_to_json_value(f).dump(); }

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

ProfileFunction profile_from_json(const std::string& text) { return profile_from_json_value(parse(text)); }
FourierFunction fourier_from_json(const std::string& text) { return fourier_from_json_value(parse(text)); }
MatrixFourierFunction matrix_fourier_from_json(const std::string& text) {
  return matrix_fourier_from_json_value(parse(text));
}

}  // namespace fuzzy

#include <tcplan/cli/instance.hpp>
#include <tcplan/core/types.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace tcplan::cli {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw InputError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(what + " must be finite");
  return v;
}

const json& array_of(const json& j, size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n)
    throw InputError(what + " must be an array of length " + std::to_string(n));
  return j;
}

// Orientations from the instance format (angles / quaternions).
Vector parse_orientations(const json& j, int d, int k, const std::string& what) {
  const Index od = orientation_dim(d);
  Vector out(k * od);
  array_of(j, static_cast<size_t>(k), what);
  for (int i = 0; i < k; ++i) {
    const std::string item = what + "[" + std::to_string(i) + "]";
    if (d == 2) {
      const double angle = number(j[static_cast<size_t>(i)], item);
      out.segment(2 * i, 2) << std::cos(angle), std::sin(angle);
    } else {
      const json& q = array_of(j[static_cast<size_t>(i)], 4, item);
      Eigen::Vector4d v;
      for (int c = 0; c < 4; ++c) v(c) = number(q[static_cast<size_t>(c)], item);
      if (std::abs(v.norm() - 1.0) > 1e-6) throw InputError(item + " is not a unit quaternion");
      out.segment<4>(4 * i) = ProjectivePoint::normalized(v).canonical().rep();
    }
  }
  return out;
}

Vector parse_positions(const json& j, int d, int k, const std::string& what) {
  Vector out(d * k);
  array_of(j, static_cast<size_t>(k), what);
  for (int i = 0; i < k; ++i) {
    const std::string item = what + "[" + std::to_string(i) + "]";
    const json& p = array_of(j[static_cast<size_t>(i)], static_cast<size_t>(d), item);
    for (int c = 0; c < d; ++c) out(d * i + c) = number(p[static_cast<size_t>(c)], item);
  }
  return out;
}

Vector parse_state(const json& j, int d, int k, double r, const std::string& what) {
  Vector orient = parse_orientations(field(j, "orientations"), d, k, what + ".orientations");
  Vector pos = parse_positions(field(j, "positions"), d, k, what + ".positions");
  Vector out(orient.size() + pos.size());
  out << orient, pos;
  try {
    RigidState::from_flat(out, d, k, r);
  } catch (const std::exception& e) {
    throw InputError(what + ": " + e.what());
  }
  return out;
}

}  // namespace

Instance parse_instance(const json& j) {
  Instance inst;
  const json& d = field(j, "d");
  const json& k = field(j, "k");
  if (!d.is_number_integer() || (d.get<int>() != 2 && d.get<int>() != 3)) throw InputError("d must be 2 or 3");
  if (!k.is_number_integer() || k.get<int>() < 2) throw InputError("k must be an integer >= 2");
  inst.d = d.get<int>();
  inst.k = k.get<int>();
  inst.r = number(field(j, "r"), "r");
  if (!(inst.r > 0.0)) throw InputError("r must be positive");
  inst.start = parse_state(field(j, "start"), inst.d, inst.k, inst.r, "start");
  inst.goal = parse_state(field(j, "goal"), inst.d, inst.k, inst.r, "goal");
  return inst;
}

Instance load_instance(const std::string& file) { return parse_instance(read_json_file(file)); }

json state_to_json(const Vector& state, int d, int k) {
  const Index od = orientation_dim(d);
  json orient = json::array(), pos = json::array();
  for (int i = 0; i < k; ++i) {
    json q = json::array();
    for (Index c = 0; c < od; ++c) q.push_back(state(i * od + c));
    orient.push_back(std::move(q));
    json p = json::array();
    for (int c = 0; c < d; ++c) p.push_back(state(k * od + d * i + c));
    pos.push_back(std::move(p));
  }
  return json{{"orientations", std::move(orient)}, {"positions", std::move(pos)}};
}

json instance_to_json(const Instance& inst) {
  auto encode = [&](const Vector& s) {
    json j = state_to_json(s, inst.d, inst.k);
    if (inst.d == 2) {
      json angles = json::array();
      for (int i = 0; i < inst.k; ++i) angles.push_back(std::atan2(s(2 * i + 1), s(2 * i)));
      j["orientations"] = std::move(angles);
    }
    return j;
  };
  return json{{"d", inst.d}, {"k", inst.k}, {"r", inst.r}, {"start", encode(inst.start)}, {"goal", encode(inst.goal)}};
}

Vector state_from_json(const json& j, int d, int k) {
  const Index od = orientation_dim(d);
  const json& orient = array_of(field(j, "orientations"), static_cast<size_t>(k), "orientations");
  Vector out(k * (od + d));
  for (int i = 0; i < k; ++i) {
    const json& q = array_of(orient[static_cast<size_t>(i)], static_cast<size_t>(od), "orientation");
    for (Index c = 0; c < od; ++c) out(i * od + c) = number(q[static_cast<size_t>(c)], "orientation");
  }
  out.tail(d * k) = parse_positions(field(j, "positions"), d, k, "positions");
  return out;
}

json path_to_json(const SampledPath& p, int d, int k) {
  json strata = json::object();
  for (const auto& [name, value] : p.domain.strata) strata[name] = value;
  json samples = json::array();
  for (const auto& [t, s] : p.samples) samples.push_back(json::array({t, state_to_json(s, d, k)}));
  return json{{"domain", p.domain.ell}, {"strata", std::move(strata)}, {"samples", std::move(samples)}};
}

SampledPath parse_path(const json& j, int d, int k) {
  SampledPath out;
  const json& dom = field(j, "domain");
  if (!dom.is_number_integer()) throw InputError("domain must be an integer");
  out.domain.ell = dom.get<int>();
  const json& strata = field(j, "strata");
  if (!strata.is_object()) throw InputError("strata must be an object");
  for (const auto& [name, value] : strata.items()) {
    if (!value.is_number_integer()) throw InputError("strata values must be integers");
    out.domain.strata.emplace_back(name, value.get<int>());
  }
  const json& samples = field(j, "samples");
  if (!samples.is_array() || samples.size() < 2) throw InputError("samples must hold at least two entries");
  for (const json& s : samples) {
    array_of(s, 2, "sample");
    out.samples.emplace_back(number(s[0], "sample time"), state_from_json(s[1], d, k));
  }
  return out;
}

json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(file + ": " + e.what());
  }
}

void write_text_file(const std::string& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw InputError("cannot write " + file);
  out << text;
  if (!out) throw InputError("failed writing " + file);
}

}  // namespace tcplan::cli

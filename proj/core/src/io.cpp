#include "wrenchpoly/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wrenchpoly/errors.hpp"

namespace wrenchpoly {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path, bool lax) {
  if (lax) return;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      fail(path + "." + it.key(), "unknown key (use lax mode to ignore)");
    }
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required key");
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "non-finite number");
  return v;
}

Eigen::VectorXd as_vector(const json& j, int expected, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  if (expected >= 0 && static_cast<int>(j.size()) != expected) {
    fail(path, "expected " + std::to_string(expected) + " entries, got " +
                   std::to_string(j.size()));
  }
  Eigen::VectorXd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    v(static_cast<int>(i)) = as_number(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

Eigen::MatrixXd as_matrix(const json& j, int rows, int cols, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (rows >= 0 && static_cast<int>(j.size()) != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows, got " +
                   std::to_string(j.size()));
  }
  if (j.empty()) return Eigen::MatrixXd(0, std::max(cols, 0));
  int ncols = cols;
  if (ncols < 0) {
    if (!j[0].is_array()) fail(path + "[0]", "expected an array");
    ncols = static_cast<int>(j[0].size());
  }
  Eigen::MatrixXd m(j.size(), ncols);
  for (size_t i = 0; i < j.size(); ++i) {
    const Eigen::VectorXd row =
        as_vector(j[i], ncols, path + "[" + std::to_string(i) + "]");
    m.row(static_cast<int>(i)) = row.transpose();
  }
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i).transpose()));
  return out;
}

}  // namespace

RobotSnapshot snapshot_from_json_text(const std::string& text, bool lax) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("snapshot: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("snapshot: top level must be an object");
  reject_unknown_keys(doc, {"name", "com", "limbs", "contacts"}, "snapshot", lax);

  RobotSnapshot robot;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("snapshot.name", "expected a string");
    robot.name = doc["name"].get<std::string>();
  }
  robot.com_position = as_vector(require(doc, "com", "snapshot"), 3, "snapshot.com");

  const json& limbs = require(doc, "limbs", "snapshot");
  if (!limbs.is_array() || limbs.empty()) fail("snapshot.limbs", "expected a nonempty array");
  for (size_t i = 0; i < limbs.size(); ++i) {
    const std::string path = "snapshot.limbs[" + std::to_string(i) + "]";
    const json& jl = limbs[i];
    if (!jl.is_object()) fail(path, "expected an object");
    reject_unknown_keys(jl, {"id", "jacobian", "tau_min", "tau_max", "bias", "foot"},
                        path, lax);
    LimbModel limb;
    const json& jid = require(jl, "id", path);
    if (!jid.is_string()) fail(path + ".id", "expected a string");
    limb.id = jid.get<std::string>();
    limb.jacobian = as_matrix(require(jl, "jacobian", path), 3, -1, path + ".jacobian");
    const int n = static_cast<int>(limb.jacobian.cols());
    limb.tau_min = as_vector(require(jl, "tau_min", path), n, path + ".tau_min");
    limb.tau_max = as_vector(require(jl, "tau_max", path), n, path + ".tau_max");
    if (jl.contains("bias")) {
      limb.bias = as_vector(jl["bias"], 3, path + ".bias");
    }
    limb.foot_position = as_vector(require(jl, "foot", path), 3, path + ".foot");
    for (int j = 0; j < n; ++j) {
      if (!(limb.tau_min(j) < limb.tau_max(j))) {
        fail(path + ".tau_min",
             "entry " + std::to_string(j) + " must be strictly below tau_max");
      }
    }
    try {
      limb.validate();
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
    robot.limbs.push_back(std::move(limb));
  }

  const json& contacts = require(doc, "contacts", "snapshot");
  if (!contacts.is_array()) fail("snapshot.contacts", "expected an array");
  if (contacts.size() != robot.limbs.size()) {
    fail("snapshot.contacts", "need exactly one contact per limb (" +
                                  std::to_string(robot.limbs.size()) + " limbs, " +
                                  std::to_string(contacts.size()) + " contacts)");
  }
  std::vector<ContactSpec> ordered(robot.limbs.size());
  std::vector<bool> seen(robot.limbs.size(), false);
  for (size_t i = 0; i < contacts.size(); ++i) {
    const std::string path = "snapshot.contacts[" + std::to_string(i) + "]";
    const json& jc = contacts[i];
    if (!jc.is_object()) fail(path, "expected an object");
    reject_unknown_keys(jc, {"limb_id", "normal", "mu", "num_edges"}, path, lax);
    const json& jid = require(jc, "limb_id", path);
    if (!jid.is_string()) fail(path + ".limb_id", "expected a string");
    const std::string limb_id = jid.get<std::string>();
    int idx = -1;
    for (size_t k = 0; k < robot.limbs.size(); ++k) {
      if (robot.limbs[k].id == limb_id) idx = static_cast<int>(k);
    }
    if (idx < 0) fail(path + ".limb_id", "no limb named '" + limb_id + "'");
    if (seen[idx]) fail(path + ".limb_id", "duplicate contact for limb '" + limb_id + "'");
    seen[idx] = true;

    ContactSpec c;
    c.normal = as_vector(require(jc, "normal", path), 3, path + ".normal");
    c.mu = as_number(require(jc, "mu", path), path + ".mu");
    const json& jk = require(jc, "num_edges", path);
    if (!jk.is_number_integer()) fail(path + ".num_edges", "expected an integer");
    c.num_edges = jk.get<int>();
    c.foot_position = robot.limbs[idx].foot_position;
    try {
      c.validate();
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
    ordered[idx] = std::move(c);
  }
  robot.contacts = std::move(ordered);
  robot.validate();
  return robot;
}

RobotSnapshot load_snapshot(const std::string& path, bool lax) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open snapshot file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return snapshot_from_json_text(buf.str(), lax);
}

std::string polytope_to_json_text(const PolytopeFile& file) {
  json doc;
  doc["dim"] = file.dim;
  doc["affine_dim"] = file.affine_dim;
  if (file.v_form) {
    doc["vertices"] = matrix_to_json(file.v_form->vertices);
    doc["rays"] = matrix_to_json(file.v_form->rays);
  }
  if (file.h_form) {
    doc["halfspaces"] = {
        {"normals", matrix_to_json(file.h_form->normals)},
        {"offsets", vector_to_json(file.h_form->offsets)},
    };
  }
  doc["meta"] = {
      {"source", file.source},
      {"tolerance",
       {{"eps_rank", file.tolerance.eps_rank},
        {"eps_hull", file.tolerance.eps_hull},
        {"eps_contain", file.tolerance.eps_contain},
        {"eps_canon", file.tolerance.eps_canon}}},
      {"stats",
       {{"n_vertices", file.stats.n_vertices},
        {"n_facets", file.stats.n_facets},
        {"build_ms", file.stats.build_ms}}},
  };
  return doc.dump(2) + "\n";
}

PolytopeFile polytope_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("polytope: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("polytope: top level must be an object");

  PolytopeFile file;
  const json& jdim = require(doc, "dim", "polytope");
  if (!jdim.is_number_integer()) fail("polytope.dim", "expected an integer");
  file.dim = jdim.get<int>();
  if (file.dim < 1) fail("polytope.dim", "must be positive");
  if (doc.contains("affine_dim")) {
    file.affine_dim = doc["affine_dim"].get<int>();
  }

  if (doc.contains("vertices")) {
    VPolytope v;
    v.dim = file.dim;
    v.vertices = as_matrix(doc["vertices"], -1, file.dim, "polytope.vertices");
    v.rays = doc.contains("rays")
                 ? as_matrix(doc["rays"], -1, file.dim, "polytope.rays")
                 : Eigen::MatrixXd(0, file.dim);
    v.affine_dim = file.affine_dim;
    file.v_form = std::move(v);
  }
  if (doc.contains("halfspaces")) {
    const json& jh = doc["halfspaces"];
    if (!jh.is_object()) fail("polytope.halfspaces", "expected an object");
    HPolytope h;
    h.dim = file.dim;
    h.normals = as_matrix(require(jh, "normals", "polytope.halfspaces"), -1,
                          file.dim, "polytope.halfspaces.normals");
    h.offsets = as_vector(require(jh, "offsets", "polytope.halfspaces"),
                          static_cast<int>(h.normals.rows()),
                          "polytope.halfspaces.offsets");
    file.h_form = std::move(h);
  }

  if (doc.contains("meta")) {
    const json& jm = doc["meta"];
    if (jm.contains("source")) file.source = jm["source"].get<std::string>();
    if (jm.contains("tolerance")) {
      const json& jt = jm["tolerance"];
      if (jt.contains("eps_rank")) file.tolerance.eps_rank = jt["eps_rank"].get<double>();
      if (jt.contains("eps_hull")) file.tolerance.eps_hull = jt["eps_hull"].get<double>();
      if (jt.contains("eps_contain")) file.tolerance.eps_contain = jt["eps_contain"].get<double>();
      if (jt.contains("eps_canon")) file.tolerance.eps_canon = jt["eps_canon"].get<double>();
    }
    if (jm.contains("stats")) {
      const json& js = jm["stats"];
      if (js.contains("n_vertices")) file.stats.n_vertices = js["n_vertices"].get<int>();
      if (js.contains("n_facets")) file.stats.n_facets = js["n_facets"].get<int>();
      if (js.contains("build_ms")) file.stats.build_ms = js["build_ms"].get<double>();
    }
  }
  return file;
}

void save_polytope(const PolytopeFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  out << polytope_to_json_text(file);
  if (!out) throw InputError("failed writing output file: " + path);
}

PolytopeFile load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open polytope file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return polytope_from_json_text(buf.str());
}

}  // namespace wrenchpoly

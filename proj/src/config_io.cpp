/******************************************************************************
 * Copyright 2026 The Agentic Loop Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#include "agentic/config_io.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace agentic {

namespace {

// --------------------------------------------------------------------------
// Reading
// --------------------------------------------------------------------------

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const YAML::Node& node, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!node.IsMap()) throw ConfigError(where.empty() ? "<root>" : where, "expected a mapping");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!ok.count(key)) throw ConfigError(join(where, key), "unknown key");
  }
}

double read_double(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw ConfigError(field, "expected a number");
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field, "expected a number, got '" + node.Scalar() + "'");
  }
}

int read_int(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw ConfigError(field, "expected an integer");
  try {
    return node.as<int>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field, "expected an integer, got '" + node.Scalar() + "'");
  }
}

bool read_bool(const YAML::Node& node, const std::string& field) {
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field, "expected true or false");
  }
}

std::string read_string(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw ConfigError(field, "expected a string");
  return node.as<std::string>();
}

Vector read_vector(const YAML::Node& node, const std::string& field) {
  if (!node.IsSequence()) throw ConfigError(field, "expected a list of numbers");
  Vector v;
  for (std::size_t i = 0; i < node.size(); ++i) v.push_back(read_double(node[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix read_matrix(const YAML::Node& node, const std::string& field) {
  if (!node.IsSequence()) throw ConfigError(field, "expected a list of rows");
  const std::size_t rows = node.size();
  if (rows == 0) return Matrix{};
  std::vector<Vector> data;
  for (std::size_t i = 0; i < rows; ++i) data.push_back(read_vector(node[i], field + "[" + std::to_string(i) + "]"));
  const std::size_t cols = data.front().size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols) throw ConfigError(field, "rows have unequal length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = data[i][j];
  }
  return m;
}

template <class T, class Fn>
void optional_field(const YAML::Node& parent, const char* key, const std::string& where, T& out, Fn read) {
  if (const YAML::Node n = parent[key]) out = read(n, join(where, key));
}

std::optional<double> read_opt_double(const YAML::Node& parent, const char* key, const std::string& where) {
  if (const YAML::Node n = parent[key]) return read_double(n, join(where, key));
  return std::nullopt;
}

PolicyKind parse_kind(const std::string& s, const std::string& field) {
  if (s == "threshold_sign") return PolicyKind::ThresholdSign;
  if (s == "hysteresis") return PolicyKind::Hysteresis;
  if (s == "dwell_constrained") return PolicyKind::DwellConstrained;
  throw ConfigError(field, "unknown policy kind '" + s + "'");
}

SwitchingPolicy read_policy(const YAML::Node& node, const std::string& where) {
  reject_unknown(node, where,
                 {"kind", "score_channel", "band", "band_map", "tau_a", "inner", "decision_delay", "m_upper"});
  if (!node["kind"]) throw ConfigError(join(where, "kind"), "missing");
  SwitchingPolicy p;
  p.kind = parse_kind(read_string(node["kind"], join(where, "kind")), join(where, "kind"));
  if (const YAML::Node n = node["score_channel"]) {
    const int ch = read_int(n, join(where, "score_channel"));
    if (ch < 1) throw ConfigError(join(where, "score_channel"), "channels are 1-based");
    p.score_channel = static_cast<std::size_t>(ch - 1);
  }
  optional_field(node, "band", where, p.band, read_double);
  optional_field(node, "tau_a", where, p.tau_a, read_double);
  optional_field(node, "decision_delay", where, p.decision_delay, read_double);
  p.m_upper = read_opt_double(node, "m_upper", where);
  if (const YAML::Node bm = node["band_map"]) {
    const std::string f = join(where, "band_map");
    if (!bm.IsSequence()) throw ConfigError(f, "expected a list");
    for (std::size_t i = 0; i < bm.size(); ++i) {
      const std::string fi = f + "[" + std::to_string(i) + "]";
      reject_unknown(bm[i], fi, {"norm_upper", "h"});
      BandSegment seg;
      optional_field(bm[i], "norm_upper", fi, seg.norm_upper, read_double);
      if (!bm[i]["h"]) throw ConfigError(join(fi, "h"), "missing");
      seg.h = read_double(bm[i]["h"], join(fi, "h"));
      p.band_map.push_back(seg);
    }
  }
  if (const YAML::Node in = node["inner"]) {
    p.inner = std::make_shared<const SwitchingPolicy>(read_policy(in, join(where, "inner")));
  }
  return p;
}

ScenarioConfig read_scenario(const YAML::Node& root) {
  reject_unknown(root, "",
                 {"name", "agency_level", "num_modes", "num_configs", "dynamics", "delays", "policy", "adaptation",
                  "reconfig", "design", "memory", "integrator", "classifier", "budget", "sweep"});
  ScenarioConfig s;
  optional_field(root, "name", "", s.name, read_string);
  if (const YAML::Node n = root["agency_level"]) {
    const auto text = read_string(n, "agency_level");
    const auto level = parse_agency_level(text);
    if (!level) throw ConfigError("agency_level", "expected one of L1..L5, got '" + text + "'");
    s.level = *level;
  }
  optional_field(root, "num_modes", "", s.num_modes, read_int);
  optional_field(root, "num_configs", "", s.num_configs, read_int);
  if (s.num_modes < 1) throw ConfigError("num_modes", "must be >= 1");
  if (s.num_configs < 1) throw ConfigError("num_configs", "must be >= 1");

  const YAML::Node dyn = root["dynamics"];
  if (!dyn || !dyn.IsSequence()) throw ConfigError("dynamics", "expected a list of flow entries");
  s.dynamics.assign(static_cast<std::size_t>(s.num_modes * s.num_configs), ModeDynamics{});
  std::vector<bool> seen(s.dynamics.size(), false);
  for (std::size_t i = 0; i < dyn.size(); ++i) {
    const std::string f = "dynamics[" + std::to_string(i) + "]";
    reject_unknown(dyn[i], f, {"sigma", "c", "label", "a", "a_delay"});
    int sigma = 1, c = 1;
    optional_field(dyn[i], "sigma", f, sigma, read_int);
    optional_field(dyn[i], "c", f, c, read_int);
    if (sigma < 1 || sigma > s.num_modes) throw ConfigError(join(f, "sigma"), "out of range");
    if (c < 1 || c > s.num_configs) throw ConfigError(join(f, "c"), "out of range");
    const auto idx = static_cast<std::size_t>((c - 1) * s.num_modes + (sigma - 1));
    if (seen[idx]) throw ConfigError(f, "duplicate (sigma, c) entry");
    seen[idx] = true;
    ModeDynamics& d = s.dynamics[idx];
    optional_field(dyn[i], "label", f, d.label, read_string);
    if (!dyn[i]["a"]) throw ConfigError(join(f, "a"), "missing");
    d.a = read_matrix(dyn[i]["a"], join(f, "a"));
    if (const YAML::Node ad = dyn[i]["a_delay"]) {
      d.a_delay = read_matrix(ad, join(f, "a_delay"));
    } else {
      d.a_delay = Matrix(d.a.rows(), d.a.cols());
    }
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) throw ConfigError("dynamics", "missing entry for sigma=" + std::to_string(k % s.num_modes + 1) +
                                                    ", c=" + std::to_string(k / s.num_modes + 1));
  }

  if (const YAML::Node n = root["delays"]) {
    reject_unknown(n, "delays", {"tau_u", "tau_theta", "tau_z", "tau_sigma", "tau_c", "tau_zeta", "tau_bar"});
    auto& d = s.delays;
    optional_field(n, "tau_u", "delays", d.tau_u, read_double);
    optional_field(n, "tau_theta", "delays", d.tau_theta, read_double);
    optional_field(n, "tau_z", "delays", d.tau_z, read_double);
    optional_field(n, "tau_sigma", "delays", d.tau_sigma, read_double);
    optional_field(n, "tau_c", "delays", d.tau_c, read_double);
    optional_field(n, "tau_zeta", "delays", d.tau_zeta, read_double);
    optional_field(n, "tau_bar", "delays", d.tau_bar, read_double);
  }

  if (const YAML::Node n = root["policy"]; n && !n.IsNull()) {
    if (n.IsScalar() && n.Scalar() == "none") {
      s.policy.reset();
    } else {
      s.policy = read_policy(n, "policy");
    }
  }

  if (const YAML::Node n = root["adaptation"]) {
    reject_unknown(n, "adaptation", {"enabled", "rho", "kappa", "coupling_gain"});
    optional_field(n, "enabled", "adaptation", s.adaptation.enabled, read_bool);
    optional_field(n, "rho", "adaptation", s.adaptation.rho, read_double);
    optional_field(n, "kappa", "adaptation", s.adaptation.kappa, read_double);
    optional_field(n, "coupling_gain", "adaptation", s.adaptation.coupling_gain, read_double);
  }

  if (const YAML::Node n = root["reconfig"]) {
    reject_unknown(n, "reconfig", {"period", "private_states", "reset"});
    optional_field(n, "period", "reconfig", s.reconfig.period, read_double);
    if (const YAML::Node ps = n["private_states"]) {
      if (!ps.IsSequence()) throw ConfigError("reconfig.private_states", "expected a list of 1-based indices");
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const int idx = read_int(ps[i], "reconfig.private_states[" + std::to_string(i) + "]");
        if (idx < 1) throw ConfigError("reconfig.private_states", "indices are 1-based");
        s.reconfig.private_states.push_back(static_cast<std::size_t>(idx - 1));
      }
    }
    if (const YAML::Node r = n["reset"]) {
      const auto text = read_string(r, "reconfig.reset");
      if (text == "zero") s.reconfig.reset = ResetMode::Zero;
      else if (text == "carry_over") s.reconfig.reset = ResetMode::CarryOver;
      else throw ConfigError("reconfig.reset", "expected zero or carry_over");
    }
  }

  if (const YAML::Node n = root["design"]) {
    reject_unknown(n, "design", {"eta_d"});
    optional_field(n, "eta_d", "design", s.eta_d, read_double);
  }
  if (const YAML::Node n = root["memory"]) {
    reject_unknown(n, "memory", {"rate"});
    optional_field(n, "rate", "memory", s.memory_rate, read_double);
  }

  if (const YAML::Node n = root["integrator"]) {
    reject_unknown(n, "integrator", {"dt", "horizon", "x0", "theta0", "m0", "zeta0", "sigma0", "c0"});
    auto& in = s.integrator;
    optional_field(n, "dt", "integrator", in.dt, read_double);
    optional_field(n, "horizon", "integrator", in.horizon, read_double);
    optional_field(n, "x0", "integrator", in.x0, read_vector);
    optional_field(n, "theta0", "integrator", in.theta0, read_vector);
    optional_field(n, "m0", "integrator", in.m0, read_vector);
    optional_field(n, "zeta0", "integrator", in.zeta0, read_vector);
    optional_field(n, "sigma0", "integrator", in.sigma0, read_int);
    optional_field(n, "c0", "integrator", in.c0, read_int);
  }

  if (const YAML::Node n = root["classifier"]) {
    reject_unknown(n, "classifier", {"settle_tol", "blowup_tol"});
    optional_field(n, "settle_tol", "classifier", s.classifier.settle_tol, read_double);
    optional_field(n, "blowup_tol", "classifier", s.classifier.blowup_tol, read_double);
  }

  if (const YAML::Node n = root["budget"]) {
    reject_unknown(n, "budget",
                   {"gamma", "nu_sigma", "nu_c", "l_theta", "l_d", "beta", "tau_a_sigma", "tau_a_c", "merged_jumps"});
    auto& b = s.budget;
    b.gamma = read_opt_double(n, "gamma", "budget");
    b.nu_sigma = read_opt_double(n, "nu_sigma", "budget");
    b.nu_c = read_opt_double(n, "nu_c", "budget");
    b.l_theta = read_opt_double(n, "l_theta", "budget");
    b.l_d = read_opt_double(n, "l_d", "budget");
    b.beta = read_opt_double(n, "beta", "budget");
    b.tau_a_sigma = read_opt_double(n, "tau_a_sigma", "budget");
    b.tau_a_c = read_opt_double(n, "tau_a_c", "budget");
    optional_field(n, "merged_jumps", "budget", b.merged_jumps, read_bool);
  }
  return s;
}

YAML::Node parse_yaml(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError("<document>", std::string("YAML syntax error: ") + e.what());
  }
}

// --------------------------------------------------------------------------
// Writing
// --------------------------------------------------------------------------

void emit_double(YAML::Emitter& out, double v) {
  if (std::isinf(v)) {
    out << (v > 0 ? ".inf" : "-.inf");
  } else if (std::isnan(v)) {
    out << ".nan";
  } else {
    out << v;
  }
}

void emit_vector(YAML::Emitter& out, const Vector& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double e : v) emit_double(out, e);
  out << YAML::EndSeq;
}

void emit_matrix(YAML::Emitter& out, const Matrix& m) {
  out << YAML::BeginSeq;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    emit_vector(out, row);
  }
  out << YAML::EndSeq;
}

void emit_key_double(YAML::Emitter& out, const char* key, double v, const char* unit = nullptr) {
  out << YAML::Key << key << YAML::Value;
  emit_double(out, v);
  if (unit) out << YAML::Comment(unit);
}

std::string_view kind_name(PolicyKind k) {
  switch (k) {
    case PolicyKind::ThresholdSign: return "threshold_sign";
    case PolicyKind::Hysteresis: return "hysteresis";
    case PolicyKind::DwellConstrained: return "dwell_constrained";
  }
  return "threshold_sign";
}

void emit_policy(YAML::Emitter& out, const SwitchingPolicy& p) {
  out << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << std::string(kind_name(p.kind));
  out << YAML::Key << "score_channel" << YAML::Value << static_cast<int>(p.score_channel + 1);
  emit_key_double(out, "decision_delay", p.decision_delay, "s");
  if (p.kind == PolicyKind::Hysteresis) {
    emit_key_double(out, "band", p.band, "score units");
    if (!p.band_map.empty()) {
      out << YAML::Key << "band_map" << YAML::Value << YAML::BeginSeq;
      for (const auto& seg : p.band_map) {
        out << YAML::Flow << YAML::BeginMap;
        emit_key_double(out, "norm_upper", seg.norm_upper);
        emit_key_double(out, "h", seg.h);
        out << YAML::EndMap;
      }
      out << YAML::EndSeq;
    }
  }
  if (p.kind == PolicyKind::DwellConstrained) emit_key_double(out, "tau_a", p.tau_a, "s");
  if (p.m_upper) emit_key_double(out, "m_upper", *p.m_upper, "score units / s");
  if (p.inner) {
    out << YAML::Key << "inner" << YAML::Value;
    emit_policy(out, *p.inner);
  }
  out << YAML::EndMap;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) { return read_scenario(parse_yaml(text)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("<file>", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioConfig load_scenario(const std::filesystem::path& path) { return parse_scenario(read_text_file(path)); }

std::optional<GridSpec> parse_grid_spec(const std::string& text) {
  const YAML::Node root = parse_yaml(text);
  const YAML::Node n = root["sweep"];
  if (!n) return std::nullopt;
  reject_unknown(n, "sweep", {"tau_a_values", "tau_bar_values"});
  GridSpec g = GridSpec::defaults();
  optional_field(n, "tau_a_values", "sweep", g.tau_a_values, read_vector);
  optional_field(n, "tau_bar_values", "sweep", g.tau_bar_values, read_vector);
  if (g.tau_a_values.empty()) throw ConfigError("sweep.tau_a_values", "must not be empty");
  if (g.tau_bar_values.empty()) throw ConfigError("sweep.tau_bar_values", "must not be empty");
  return g;
}

std::string serialize_scenario(const ScenarioConfig& s) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << s.name;
  out << YAML::Key << "agency_level" << YAML::Value << std::string(to_string(s.level));
  out << YAML::Key << "num_modes" << YAML::Value << s.num_modes;
  out << YAML::Key << "num_configs" << YAML::Value << s.num_configs;

  out << YAML::Key << "dynamics" << YAML::Value << YAML::BeginSeq;
  for (int c = 1; c <= s.num_configs; ++c) {
    for (int sigma = 1; sigma <= s.num_modes; ++sigma) {
      const ModeDynamics& d = s.dynamics_for(sigma, c);
      out << YAML::BeginMap;
      out << YAML::Key << "sigma" << YAML::Value << sigma;
      out << YAML::Key << "c" << YAML::Value << c;
      out << YAML::Key << "label" << YAML::Value << d.label;
      out << YAML::Key << "a" << YAML::Value << YAML::Comment("1/s");
      emit_matrix(out, d.a);
      out << YAML::Key << "a_delay" << YAML::Value << YAML::Comment("1/s");
      emit_matrix(out, d.a_delay);
      out << YAML::EndMap;
    }
  }
  out << YAML::EndSeq;

  const auto& dl = s.delays;
  out << YAML::Key << "delays" << YAML::Value << YAML::BeginMap;
  emit_key_double(out, "tau_u", dl.tau_u, "s");
  emit_key_double(out, "tau_theta", dl.tau_theta, "s");
  emit_key_double(out, "tau_z", dl.tau_z, "s");
  emit_key_double(out, "tau_sigma", dl.tau_sigma, "s");
  emit_key_double(out, "tau_c", dl.tau_c, "s");
  emit_key_double(out, "tau_zeta", dl.tau_zeta, "s");
  emit_key_double(out, "tau_bar", dl.tau_bar, "s");
  out << YAML::EndMap;

  out << YAML::Key << "policy" << YAML::Value;
  if (s.policy) emit_policy(out, *s.policy);
  else out << "none";

  out << YAML::Key << "adaptation" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "enabled" << YAML::Value << s.adaptation.enabled;
  emit_key_double(out, "rho", s.adaptation.rho, "1/s");
  emit_key_double(out, "kappa", s.adaptation.kappa, "dimensionless");
  emit_key_double(out, "coupling_gain", s.adaptation.coupling_gain, "1/s");
  out << YAML::EndMap;

  out << YAML::Key << "reconfig" << YAML::Value << YAML::BeginMap;
  emit_key_double(out, "period", s.reconfig.period, "s");
  out << YAML::Key << "private_states" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (std::size_t idx : s.reconfig.private_states) out << static_cast<int>(idx + 1);
  out << YAML::EndSeq;
  out << YAML::Key << "reset" << YAML::Value << (s.reconfig.reset == ResetMode::Zero ? "zero" : "carry_over");
  out << YAML::EndMap;

  out << YAML::Key << "design" << YAML::Value << YAML::BeginMap;
  emit_key_double(out, "eta_d", s.eta_d, "goal units / s");
  out << YAML::EndMap;
  out << YAML::Key << "memory" << YAML::Value << YAML::BeginMap;
  emit_key_double(out, "rate", s.memory_rate, "1/s");
  out << YAML::EndMap;

  const auto& in = s.integrator;
  out << YAML::Key << "integrator" << YAML::Value << YAML::BeginMap;
  emit_key_double(out, "dt", in.dt, "s");
  emit_key_double(out, "horizon", in.horizon, "s");
  out << YAML::Key << "x0" << YAML::Value;
  emit_vector(out, in.x0);
  out << YAML::Key << "theta0" << YAML::Value;
  emit_vector(out, in.theta0);
  out << YAML::Key << "m0" << YAML::Value;
  emit_vector(out, in.m0);
  out << YAML::Key << "zeta0" << YAML::Value;
  emit_vector(out, in.zeta0);
  out << YAML::Key << "sigma0" << YAML::Value << in.sigma0;
  out << YAML::Key << "c0" << YAML::Value << in.c0;
  out << YAML::EndMap;

  out << YAML::Key << "classifier" << YAML::Value << YAML::BeginMap;
  emit_key_double(out, "settle_tol", s.classifier.settle_tol, "|x| units");
  emit_key_double(out, "blowup_tol", s.classifier.blowup_tol, "|x| units");
  out << YAML::EndMap;

  const auto& b = s.budget;
  out << YAML::Key << "budget" << YAML::Value << YAML::BeginMap;
  auto opt = [&](const char* key, const std::optional<double>& v, const char* unit) {
    if (v) emit_key_double(out, key, *v, unit);
  };
  opt("gamma", b.gamma, "1/s");
  opt("nu_sigma", b.nu_sigma, "dimensionless");
  opt("nu_c", b.nu_c, "dimensionless");
  opt("l_theta", b.l_theta, "dimensionless");
  opt("l_d", b.l_d, "1/(goal units)");
  opt("beta", b.beta, "1/s^2");
  opt("tau_a_sigma", b.tau_a_sigma, "s");
  opt("tau_a_c", b.tau_a_c, "s");
  out << YAML::Key << "merged_jumps" << YAML::Value << b.merged_jumps;
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace agentic

// SPDX-License-Identifier: Apache-2.0
//
// risim - physics-based simulator for RIS-assisted wireless links
// Copyright (c) 2026 risim contributors

#include "core/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "core/json_util.hpp"
#include "core/numerics.hpp"

namespace risim {

namespace {

bool is_resolution_label(const std::string& label, int& bits_out) {
  const auto dash = label.find("-bit");
  if (dash == std::string::npos || dash == 0 || dash + 4 != label.size()) return false;
  int bits = 0;
  for (std::size_t i = 0; i < dash; ++i) {
    if (label[i] < '0' || label[i] > '9') return false;
    bits = bits * 10 + (label[i] - '0');
  }
  bits_out = bits;
  return true;
}

std::vector<double> unwrap_degrees(const std::vector<ResponseSample>& samples) {
  std::vector<double> out;
  out.reserve(samples.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i == 0) {
      prev = samples[i].phase_deg;
    } else {
      double delta = samples[i].phase_deg - samples[i - 1].phase_deg;
      delta = std::remainder(delta, 360.0);
      prev = prev + delta;
    }
    out.push_back(prev);
  }
  return out;
}

}  // namespace

Codebook Codebook::from_states(std::vector<ReflectionState> states,
                               std::map<std::string, std::vector<std::string>> subsets) {
  if (states.empty()) {
    fail(ErrorCode::invalid_argument, "a codebook needs at least one state");
  }
  Codebook cb;
  for (std::size_t s = 0; s < states.size(); ++s) {
    ReflectionState& st = states[s];
    const std::string where = "states[" + std::to_string(s) + "]";
    if (st.code.empty()) {
      fail(ErrorCode::parse_error, "field '" + where + ".code' must be non-empty");
    }
    if (st.samples.empty()) {
      fail(ErrorCode::parse_error, "field '" + where + ".samples' must be non-empty");
    }
    for (std::size_t i = 0; i < st.samples.size(); ++i) {
      const ResponseSample& smp = st.samples[i];
      const std::string sw = where + ".samples[" + std::to_string(i) + "]";
      if (!std::isfinite(smp.f_hz) || !std::isfinite(smp.mag_db) || !std::isfinite(smp.phase_deg)) {
        fail(ErrorCode::parse_error, "field '" + sw + "' must be finite");
      }
      if (smp.mag_db > 0.0) {
        fail(ErrorCode::parse_error,
             "field '" + sw + ".mag_db' must be <= 0 (magnitude in (0, 1])");
      }
      if (i > 0 && !(smp.f_hz > st.samples[i - 1].f_hz)) {
        fail(ErrorCode::parse_error,
             "field '" + sw + ".f_hz' must be strictly increasing");
      }
    }
    if (cb.index_.count(st.code) != 0) {
      fail(ErrorCode::parse_error, "duplicate state code '" + st.code + "'");
    }
    st.unwrapped_phase_deg = unwrap_degrees(st.samples);
    cb.index_[st.code] = static_cast<int>(s);
  }
  for (const auto& [label, codes] : subsets) {
    int bits = 0;
    if (is_resolution_label(label, bits)) {
      const std::size_t expect = static_cast<std::size_t>(1) << bits;
      if (codes.size() != expect) {
        fail(ErrorCode::parse_error,
             "subset '" + label + "' must list " + std::to_string(expect) + " codes, got " +
                 std::to_string(codes.size()));
      }
    }
    for (const std::string& code : codes) {
      if (cb.index_.count(code) == 0) {
        fail(ErrorCode::parse_error,
             "subset '" + label + "' references unknown code '" + code + "'");
      }
    }
  }
  cb.states_ = std::move(states);
  cb.subsets_ = std::move(subsets);
  return cb;
}

Codebook Codebook::parse(const std::string& json_text) {
  const Json doc = parse_json_text(json_text, "codebook");
  const Json& jstates = require_field(doc, "states", "");
  if (!jstates.is_array() || jstates.empty()) {
    fail(ErrorCode::parse_error, "field 'states' must be a non-empty array");
  }
  std::vector<ReflectionState> states;
  states.reserve(jstates.size());
  for (std::size_t s = 0; s < jstates.size(); ++s) {
    const std::string where = "states[" + std::to_string(s) + "]";
    const Json& jst = jstates[s];
    ReflectionState st;
    st.code = as_string(require_field(jst, "code", where), where + ".code");
    const Json& jsamples = require_field(jst, "samples", where);
    if (!jsamples.is_array()) {
      fail(ErrorCode::parse_error, "field '" + where + ".samples' must be an array");
    }
    for (std::size_t i = 0; i < jsamples.size(); ++i) {
      const std::string sw = where + ".samples[" + std::to_string(i) + "]";
      const Json& jsmp = jsamples[i];
      ResponseSample smp;
      smp.f_hz = as_number(require_field(jsmp, "f_hz", sw), sw + ".f_hz");
      smp.mag_db = as_number(require_field(jsmp, "mag_db", sw), sw + ".mag_db");
      smp.phase_deg = as_number(require_field(jsmp, "phase_deg", sw), sw + ".phase_deg");
      st.samples.push_back(smp);
    }
    states.push_back(std::move(st));
  }
  std::map<std::string, std::vector<std::string>> subsets;
  if (doc.contains("subsets")) {
    const Json& jsubsets = doc["subsets"];
    if (!jsubsets.is_object()) {
      fail(ErrorCode::parse_error, "field 'subsets' must be an object");
    }
    for (const auto& [label, jcodes] : jsubsets.items()) {
      if (!jcodes.is_array()) {
        fail(ErrorCode::parse_error, "field 'subsets." + label + "' must be an array");
      }
      std::vector<std::string> codes;
      for (std::size_t i = 0; i < jcodes.size(); ++i) {
        codes.push_back(as_string(jcodes[i], "subsets." + label + "[" + std::to_string(i) + "]"));
      }
      subsets[label] = std::move(codes);
    }
  }
  return from_states(std::move(states), std::move(subsets));
}

Codebook Codebook::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::io_error, "cannot open codebook file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Codebook Codebook::ideal(int n_states) {
  if (n_states < 2) {
    fail(ErrorCode::invalid_argument, "an ideal codebook needs at least 2 states");
  }
  std::vector<ReflectionState> states;
  states.reserve(static_cast<std::size_t>(n_states));
  for (int k = 0; k < n_states; ++k) {
    ReflectionState st;
    st.code = std::to_string(k);
    st.samples.push_back({0.0, 0.0, wrap_deg_180(360.0 * k / n_states)});
    states.push_back(std::move(st));
  }
  return from_states(std::move(states), {});
}

Codebook Codebook::restrict_to(const std::string& subset_label) const {
  auto it = subsets_.find(subset_label);
  if (it == subsets_.end()) {
    fail(ErrorCode::not_found, "codebook has no subset '" + subset_label + "'");
  }
  std::vector<bool> keep(states_.size(), false);
  for (const std::string& code : it->second) {
    keep[static_cast<std::size_t>(require_index(code))] = true;
  }
  std::vector<ReflectionState> states;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    if (keep[k]) states.push_back(states_[k]);
  }
  std::map<std::string, std::vector<std::string>> subsets;
  for (const auto& [label, codes] : subsets_) {
    const bool covered = std::all_of(codes.begin(), codes.end(), [&](const std::string& c) {
      return keep[static_cast<std::size_t>(require_index(c))];
    });
    if (covered) subsets[label] = codes;
  }
  return from_states(std::move(states), std::move(subsets));
}

int Codebook::index_of(const std::string& code) const {
  auto it = index_.find(code);
  return it == index_.end() ? -1 : it->second;
}

int Codebook::require_index(const std::string& code) const {
  const int k = index_of(code);
  if (k < 0) {
    fail(ErrorCode::not_found, "codebook has no state with code '" + code + "'");
  }
  return k;
}

std::pair<double, double> Codebook::response_at(int k, double f_hz) const {
  const ReflectionState& st = states_[static_cast<std::size_t>(k)];
  if (st.frequency_flat()) {
    return {st.samples[0].mag_db, st.unwrapped_phase_deg[0]};
  }
  const double f_min = st.samples.front().f_hz;
  const double f_max = st.samples.back().f_hz;
  if (f_hz < f_min || f_hz > f_max) {
    fail(ErrorCode::out_of_band,
         "frequency " + std::to_string(f_hz) + " Hz outside the sampled band of state '" +
             st.code + "' [" + std::to_string(f_min) + ", " + std::to_string(f_max) + "]");
  }
  auto hi = std::lower_bound(st.samples.begin(), st.samples.end(), f_hz,
                             [](const ResponseSample& s, double f) { return s.f_hz < f; });
  const std::size_t j = static_cast<std::size_t>(hi - st.samples.begin());
  if (st.samples[j].f_hz == f_hz) {
    return {st.samples[j].mag_db, st.unwrapped_phase_deg[j]};
  }
  const std::size_t i = j - 1;
  const double t = (f_hz - st.samples[i].f_hz) / (st.samples[j].f_hz - st.samples[i].f_hz);
  const double mag = st.samples[i].mag_db + t * (st.samples[j].mag_db - st.samples[i].mag_db);
  const double ph =
      st.unwrapped_phase_deg[i] + t * (st.unwrapped_phase_deg[j] - st.unwrapped_phase_deg[i]);
  return {mag, ph};
}

std::complex<double> Codebook::gamma(int k, double f_hz) const {
  const auto [mag_db, phase_deg] = response_at(k, f_hz);
  return std::polar(db20_to_linear(mag_db), deg_to_rad(phase_deg));
}

std::complex<double> Codebook::gamma(const std::string& code, double f_hz) const {
  return gamma(require_index(code), f_hz);
}

double Codebook::phase_deg(int k, double f_hz) const {
  return wrap_deg_180(response_at(k, f_hz).second);
}

double Codebook::mag_db(int k, double f_hz) const { return response_at(k, f_hz).first; }

double phase_std_deg(std::vector<double> phases_deg) {
  if (phases_deg.size() < 2) {
    fail(ErrorCode::invalid_argument, "phase spread needs at least 2 phases");
  }
  for (double& p : phases_deg) {
    if (!std::isfinite(p)) {
      fail(ErrorCode::invalid_argument, "phases must be finite");
    }
    p = wrap_deg_180(p);
  }
  std::sort(phases_deg.begin(), phases_deg.end());
  double sum_cubes = 0.0;
  for (std::size_t i = 0; i + 1 < phases_deg.size(); ++i) {
    const double gap = phases_deg[i + 1] - phases_deg[i];
    sum_cubes += gap * gap * gap;
  }
  const double wrap_gap = (phases_deg.front() + 360.0) - phases_deg.back();
  sum_cubes += wrap_gap * wrap_gap * wrap_gap;
  return std::sqrt(sum_cubes / (12.0 * 360.0));
}

double equivalent_bits(double sigma_deg) {
  if (!(sigma_deg > 0.0) || !std::isfinite(sigma_deg)) {
    fail(ErrorCode::invalid_argument, "sigma must be positive and finite");
  }
  return std::log2(360.0 / (std::sqrt(12.0) * sigma_deg));
}

std::vector<double> frequency_grid(double f_lo_hz, double f_hi_hz, double f_step_hz) {
  if (!(f_step_hz > 0.0)) {
    fail(ErrorCode::invalid_argument, "frequency step must be positive");
  }
  if (!(f_hi_hz >= f_lo_hz)) {
    fail(ErrorCode::invalid_argument, "band upper edge must be >= lower edge");
  }
  std::vector<double> grid;
  const double span = f_hi_hz - f_lo_hz;
  const std::size_t count = static_cast<std::size_t>(std::floor(span / f_step_hz + 1e-9)) + 1;
  grid.reserve(count);
  for (std::size_t k = 0; k < count; ++k) grid.push_back(f_lo_hz + static_cast<double>(k) * f_step_hz);
  return grid;
}

namespace {

QualityRow quality_at(const Codebook& cb, double f_hz) {
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(cb.size()));
  for (int k = 0; k < cb.size(); ++k) phases.push_back(cb.phase_deg(k, f_hz));
  QualityRow row;
  row.f_hz = f_hz;
  row.sigma_deg = phase_std_deg(std::move(phases));
  row.n_bit = equivalent_bits(row.sigma_deg);
  return row;
}

}  // namespace

std::vector<QualityRow> quality_sweep(const Codebook& cb, double f_lo_hz, double f_hi_hz,
                                      double f_step_hz) {
  std::vector<QualityRow> rows;
  for (const double f : frequency_grid(f_lo_hz, f_hi_hz, f_step_hz)) {
    rows.push_back(quality_at(cb, f));
  }
  return rows;
}

QualityRow quality_single(const Codebook& cb) {
  double f = 0.0;
  for (int k = 0; k < cb.size(); ++k) {
    const ReflectionState& st = cb.state(k);
    if (!st.frequency_flat()) {
      fail(ErrorCode::invalid_argument,
           "state '" + st.code + "' is dispersive; an analysis band must be given");
    }
    if (k == 0) {
      f = st.samples[0].f_hz;
    } else if (st.samples[0].f_hz != f) {
      fail(ErrorCode::invalid_argument,
           "states carry different sample frequencies; an analysis band must be given");
    }
  }
  return quality_at(cb, f);
}

}  // namespace risim

#include "qdo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "qdo/amplified.hpp"
#include "qdo/bft.hpp"
#include "qdo/ck.hpp"
#include "qdo/coupled.hpp"
#include "qdo/errors.hpp"
#include "qdo/gaussian.hpp"

namespace qdo::cli {

namespace {

constexpr size_t kMaxRows = 1000000;

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ConfigError("trailing characters in " + what);
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + what + ": '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) out.push_back(tok);
  return out;
}

double get_param(const std::map<std::string, double>& params,
                 const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) {
    throw ConfigError("missing required parameter '" + name + "'");
  }
  return it->second;
}

double get_param_or(const std::map<std::string, double>& params,
                    const std::string& name, double fallback) {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

void check_known_params(const std::map<std::string, double>& params,
                        std::initializer_list<const char*> known) {
  for (const auto& entry : params) {
    bool found = false;
    for (const char* k : known) {
      if (entry.first == k) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw ConfigError("unknown parameter '" + entry.first +
                        "' for this scenario");
    }
  }
}

void push(std::vector<Cell>& row, double v) { row.emplace_back(v); }
void push(std::vector<Cell>& row, bool v) { row.emplace_back(v); }
void push(std::vector<Cell>& row, const std::string& v) { row.emplace_back(v); }

// ---- scenario row builders ------------------------------------------------

OscillatorParams oscillator_from(const std::map<std::string, double>& params,
                                 double hbar) {
  OscillatorParams p;
  p.m = get_param(params, "m");
  p.omega = get_param(params, "omega");
  p.gamma = get_param(params, "gamma");
  p.hbar = hbar;
  return p;
}

void ck_columns(Table& t, bool amplified_names) {
  t.columns = {"scenario",   "m",
               "gamma",      "omega",
               "hbar",       "t",
               "omega_reduced", amplified_names ? "y2" : "x2",
               "p2",         "uncertainty",
               "energy",     "energy_closed",
               "gamma_c",    "gamma_delta",
               "gamma_mu_im", "purity",
               "delta_qd",   "delta_qd_closed",
               "delta_cc",   "delta_cc_closed",
               "status"};
}

void ck_row(Table& t, const std::string& scenario,
            const std::map<std::string, double>& params, double hbar,
            double time) {
  check_known_params(params, {"m", "omega", "gamma"});
  const OscillatorParams p = oscillator_from(params, hbar);
  const bool amp = scenario == "amplified";
  const Gaussian1D g =
      amp ? amplified::density(p, time) : ck::ck_density(p, time);
  const Dispersions d =
      amp ? amplified::dispersions(p, time) : ck::dispersions(p, time);

  std::vector<Cell> row;
  push(row, scenario);
  push(row, p.m);
  push(row, p.gamma);
  push(row, p.omega);
  push(row, p.hbar);
  push(row, time);
  push(row, ck::omega_reduced(p));
  push(row, d.x2);
  push(row, d.p2);
  push(row, ck::uncertainty(p));
  push(row, ck::energy_expectation(p));
  push(row, ck::energy_closed_form(p));
  push(row, g.gamma_c);
  push(row, g.gamma_delta);
  push(row, g.gamma_mu.imag());
  push(row, purity1d(g));
  push(row, delta_qd(g));
  push(row, 0.5);  // closed form: exactly 1/2 for the one-mode Gaussian
  const double dcc = delta_cc(g);
  push(row, dcc);
  push(row, dcc);  // the closed form coincides with the definition here
  push(row, std::string(physical1d(g) ? "ok" : "physicality_warning"));
  t.rows.push_back(std::move(row));
}

OscillatorParams bft_oscillator_from(const std::map<std::string, double>& params,
                                     double hbar) {
  OscillatorParams p;
  p.m = get_param_or(params, "m", 1.0);
  p.gamma = get_param_or(params, "gamma", 0.0);
  p.hbar = hbar;
  const bool has_omega = params.count("omega") > 0;
  const bool has_k = params.count("k") > 0;
  const bool has_momega = params.count("momega") > 0;
  if (has_omega + has_k + has_momega != 1) {
    throw ConfigError(
        "bft: exactly one of omega, k, momega must be supplied");
  }
  if (has_omega) {
    p.omega = get_param(params, "omega");
  } else if (has_k) {
    const double k = get_param(params, "k");
    if (!(k > 0.0)) throw ConfigError("bft: k must be > 0");
    p.omega = std::sqrt(k / p.m);
  } else {
    // momega = m*Omega/hbar: choose omega so the reduced frequency matches.
    const double momega = get_param(params, "momega");
    if (!(momega > 0.0)) throw ConfigError("bft: momega must be > 0");
    p.omega = std::hypot(momega * p.hbar / p.m, p.gamma / (2.0 * p.m));
  }
  return p;
}

void bft_columns(Table& t) {
  t.columns = {"scenario",     "m",
               "gamma",        "omega",
               "hbar",         "momega",
               "d_abs",        "theta",
               "t",            "gamma_c",
               "gamma_delta",  "gamma_mu_im",
               "gamma_y_c",    "gamma_y_delta",
               "gamma_y_mu_im", "purity",
               "delta_qd",     "delta_qd_closed",
               "delta_cc",     "delta_cc_closed",
               "decohered",    "correlated",
               "classical",    "status"};
}

void bft_row(Table& t, const std::map<std::string, double>& params,
             double hbar, double time) {
  check_known_params(params, {"m", "gamma", "omega", "k", "momega", "d_abs",
                              "theta"});
  bft::ParticularSpec spec;
  spec.params = bft_oscillator_from(params, hbar);
  spec.d_abs = get_param(params, "d_abs");
  spec.theta = get_param(params, "theta");

  const Gaussian1D red = bft::reduced_damped(spec, time);
  const Gaussian1D red_y = bft::reduced_amplified(spec, time);
  const bft::ClosedFormMeasures cfm = bft::closed_form_measures(spec);
  const bft::Classicality cls = bft::classicality_check(spec);

  std::vector<Cell> row;
  push(row, std::string("bft"));
  push(row, spec.params.m);
  push(row, spec.params.gamma);
  push(row, spec.params.omega);
  push(row, spec.params.hbar);
  push(row, spec.params.m * ck::omega_reduced(spec.params) / spec.params.hbar);
  push(row, spec.d_abs);
  push(row, spec.theta);
  push(row, time);
  push(row, red.gamma_c);
  push(row, red.gamma_delta);
  push(row, red.gamma_mu.imag());
  push(row, red_y.gamma_c);
  push(row, red_y.gamma_delta);
  push(row, red_y.gamma_mu.imag());
  push(row, purity1d(red));
  push(row, delta_qd(red));
  push(row, cfm.delta_qd);
  push(row, delta_cc(red));
  push(row, cfm.delta_cc);
  push(row, cls.decohered);
  push(row, cls.correlated);
  push(row, cls.classical);
  push(row, std::string(physical1d(red) ? "ok" : "physicality_warning"));
  t.rows.push_back(std::move(row));
}

void coupled_columns(Table& t) {
  t.columns = {"scenario", "m",        "omega1",        "omega2",
               "lambda",   "eta",      "vartheta",      "width_d",
               "gamma_delta_mix", "purity", "delta_qd", "delta_cc",
               "status"};
}

void coupled_row(Table& t, const std::map<std::string, double>& params,
                 double /*hbar*/) {
  check_known_params(params, {"m", "omega1", "omega2", "lambda"});
  coupled::CoupledParams p;
  p.m = get_param(params, "m");
  p.omega1 = get_param(params, "omega1");
  p.omega2 = get_param(params, "omega2");
  p.lambda = get_param(params, "lambda");

  const coupled::MixedReduced red = coupled::coupled_reduced(p);
  const Gaussian1D g = coupled::to_gaussian(red);

  std::vector<Cell> row;
  push(row, std::string("coupled"));
  push(row, p.m);
  push(row, p.omega1);
  push(row, p.omega2);
  push(row, p.lambda);
  push(row, red.eta);
  push(row, red.vartheta);
  push(row, red.width_d);
  push(row, red.gamma_delta_mix);
  push(row, purity1d(g));
  push(row, delta_qd(g));
  push(row, delta_cc(g));
  push(row, std::string(physical1d(g) ? "ok" : "physicality_warning"));
  t.rows.push_back(std::move(row));
}

void validate_no_nan(const Table& t) {
  for (size_t r = 0; r < t.rows.size(); ++r) {
    for (size_t c = 0; c < t.rows[r].size(); ++c) {
      if (const double* v = std::get_if<double>(&t.rows[r][c])) {
        if (std::isnan(*v)) {
          throw std::runtime_error("NaN in output row " + std::to_string(r) +
                                   ", column '" + t.columns[c] + "'");
        }
      }
    }
  }
}

}  // namespace

std::vector<double> TimeSpec::times() const {
  if (step == 0.0) return {start};
  std::vector<double> out;
  const long count = std::lround(std::floor((end - start) / step + 1e-9)) + 1;
  out.reserve(count);
  for (long i = 0; i < count; ++i) out.push_back(start + i * step);
  return out;
}

TimeSpec parse_time_spec(const std::string& text) {
  const auto parts = split(text, ':');
  TimeSpec ts;
  if (parts.size() == 1) {
    ts.start = ts.end = parse_double(parts[0], "time");
    ts.step = 0.0;
    return ts;
  }
  if (parts.size() != 3) {
    throw ConfigError("time spec must be 't' or 'start:end:step', got '" +
                      text + "'");
  }
  ts.start = parse_double(parts[0], "time start");
  ts.end = parse_double(parts[1], "time end");
  ts.step = parse_double(parts[2], "time step");
  if (!(ts.step > 0.0) || ts.end < ts.start) {
    throw ConfigError("time spec must be monotone with step > 0");
  }
  return ts;
}

SweepAxis parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("sweep spec must be 'name=a:b:count' or 'name=v1,v2,...'");
  }
  SweepAxis axis;
  axis.name = text.substr(0, eq);
  std::replace(axis.name.begin(), axis.name.end(), '-', '_');
  const std::string rest = text.substr(eq + 1);
  if (rest.find(':') != std::string::npos) {
    const auto parts = split(rest, ':');
    if (parts.size() != 3) {
      throw ConfigError("sweep range must be a:b:count, got '" + rest + "'");
    }
    const double a = parse_double(parts[0], "sweep start");
    const double b = parse_double(parts[1], "sweep end");
    const long count = std::lround(parse_double(parts[2], "sweep count"));
    if (count < 1 || static_cast<size_t>(count) > kMaxRows) {
      throw ConfigError("sweep count out of range");
    }
    if (count == 1) {
      axis.values = {a};
    } else {
      for (long i = 0; i < count; ++i) {
        axis.values.push_back(a + i * (b - a) / (count - 1));
      }
    }
  } else {
    for (const auto& v : split(rest, ',')) {
      axis.values.push_back(parse_double(v, "sweep value"));
    }
    if (axis.values.empty()) throw ConfigError("empty sweep value list");
  }
  return axis;
}

Table run(const RunConfig& config) {
  Table t;
  const std::string& sc = config.scenario;
  if (sc != "ck" && sc != "bft" && sc != "amplified" && sc != "coupled") {
    throw ConfigError("unknown scenario '" + sc +
                      "' (expected ck|bft|amplified|coupled)");
  }

  const std::vector<double> times = config.time.times();
  size_t combos = 1;
  for (const auto& axis : config.sweep) {
    if (axis.values.empty()) throw ConfigError("empty sweep axis");
    if (combos > kMaxRows / axis.values.size()) {
      throw ConfigError("sweep too large (> 1e6 rows)");
    }
    combos *= axis.values.size();
  }
  if (combos * times.size() > kMaxRows) {
    throw ConfigError("sweep too large (> 1e6 rows)");
  }

  if (sc == "coupled") {
    coupled_columns(t);
  } else if (sc == "bft") {
    bft_columns(t);
  } else {
    ck_columns(t, sc == "amplified");
  }

  for (size_t combo = 0; combo < combos; ++combo) {
    std::map<std::string, double> params = config.params;
    size_t rem = combo;
    for (auto it = config.sweep.rbegin(); it != config.sweep.rend(); ++it) {
      params[it->name] = it->values[rem % it->values.size()];
      rem /= it->values.size();
    }
    if (sc == "coupled") {
      coupled_row(t, params, config.hbar);
    } else {
      for (double time : times) {
        if (sc == "bft") {
          bft_row(t, params, config.hbar, time);
        } else {
          ck_row(t, sc, params, config.hbar, time);
        }
      }
    }
  }
  validate_no_nan(t);
  return t;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

namespace {

std::string cell_to_csv(const Cell& c) {
  if (const double* v = std::get_if<double>(&c)) return format_double(*v);
  if (const bool* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::ostringstream os;
  os << "#schema=1\n";
  for (size_t c = 0; c < table.columns.size(); ++c) {
    os << table.columns[c] << (c + 1 < table.columns.size() ? "," : "");
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      os << cell_to_csv(row[c]) << (c + 1 < row.size() ? "," : "");
    }
    os << "\n";
  }
  return os.str();
}

std::string to_json_lines(const Table& table) {
  std::ostringstream os;
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (size_t c = 0; c < row.size(); ++c) {
      const std::string& key = table.columns[c];
      if (const double* v = std::get_if<double>(&row[c])) {
        if (std::isinf(*v)) {
          obj[key] = *v > 0 ? "inf" : "-inf";
        } else {
          obj[key] = *v;
        }
      } else if (const bool* b = std::get_if<bool>(&row[c])) {
        obj[key] = *b;
      } else {
        obj[key] = std::get<std::string>(row[c]);
      }
    }
    os << obj.dump() << "\n";
  }
  return os.str();
}

}  // namespace qdo::cli

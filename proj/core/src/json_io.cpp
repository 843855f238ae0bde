#include "slocc3/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace slocc3 {

namespace {

using nlohmann::json;

// 17 significant digits: lossless for binary64 and satisfies the file
// format's >= 15 significant digit rule even for values like 0.5.
std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

json ghz_params_json(const GhzCanonicalParams& p) {
  return json{{"K", p.K},      {"delta", p.delta}, {"alpha", p.alpha},
              {"beta", p.beta}, {"gamma", p.gamma}, {"phi", p.phi}};
}

json w_params_json(const WCanonicalParams& p) {
  return json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

}  // namespace

std::string state_json(const PureState& psi) {
  std::ostringstream out;
  out << "{\n  \"dims\": [";
  for (std::size_t i = 0; i < psi.dims().size(); ++i) {
    if (i) out << ", ";
    out << psi.dims()[i];
  }
  out << "],\n  \"amplitudes\": [\n";
  for (int i = 0; i < psi.total_dim(); ++i) {
    const Complex z = psi.amplitude(i);
    out << "    [" << format_double(z.real()) << ", " << format_double(z.imag()) << "]";
    if (i + 1 < psi.total_dim()) out << ",";
    out << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

PureState parse_state_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("amplitudes"))
      fail(Errc::ParseError, "state file needs 'dims' and 'amplitudes'");
    std::vector<int> dims = doc["dims"].get<std::vector<int>>();
    std::vector<Complex> amps;
    for (const json& entry : doc["amplitudes"]) {
      if (!entry.is_array() || entry.size() != 2)
        fail(Errc::ParseError, "each amplitude must be a [re, im] pair");
      amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return PureState(std::move(dims), std::move(amps));
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("malformed state file: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    fail(Errc::ParseError, std::string("invalid state data: ") + e.what());
  }
}

void save_state_file(const PureState& psi, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot open file for writing: " + path);
  out << state_json(psi);
  if (!out) fail(Errc::ParseError, "failed writing file: " + path);
}

PureState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string measure_report_json(const MeasureReport& r, int indent) {
  const json doc{
      {"s_a", r.s_a},         {"s_b", r.s_b},         {"s_c", r.s_c},
      {"rank_a", r.rank_a},   {"rank_b", r.rank_b},   {"rank_c", r.rank_c},
      {"c_ab", r.c_ab},       {"c_ac", r.c_ac},       {"c_bc", r.c_bc},
      {"c_a_bc", r.c_a_bc},   {"c_b_ac", r.c_b_ac},   {"c_c_ab", r.c_c_ab},
      {"tau", r.tau},         {"e_tau", r.e_tau},
  };
  return doc.dump(indent);
}

std::string classification_report_json(const ClassificationReport& r, int indent) {
  json doc{
      {"class", slocc_label_name(r.cls.label)},
      {"ranks", r.cls.local_ranks},
      {"tau", r.tau},
      {"tensor_rank", r.cls.tensor_rank},
  };
  if (r.ghz_params)
    doc["canonical"] = ghz_params_json(*r.ghz_params);
  else if (r.w_params)
    doc["canonical"] = w_params_json(*r.w_params);
  else if (!r.schmidt_coefficients.empty())
    doc["canonical"] = json{{"schmidt", r.schmidt_coefficients}};
  else
    doc["canonical"] = json::object();
  return doc.dump(indent);
}

std::string residual_report_json(const ResidualReport& r, int indent) {
  const json doc{
      {"measure", pair_measure_name(r.measure)},
      {"e_bar", r.e_bar},
      {"e_min", r.e_min},
      {"e_tau", r.e_tau},
      {"c2_min", r.c2_min},
  };
  return doc.dump(indent);
}

std::string dim_count_json(const DimCount& c, int indent) {
  const json doc{
      {"dims", c.dims},
      {"state_params", c.state_params},
      {"group_params", c.group_params},
      {"lower_bound", c.lower_bound},
  };
  return doc.dump(indent);
}

std::string verify_report_json(const VerifyReport& r, int indent) {
  json doc{
      {"suite", r.suite},
      {"trials", r.trials},
      {"max_violation", r.max_violation},
      {"worst_seed", r.worst_seed},
      {"worst_index", r.worst_index},
      {"tolerance", r.tolerance},
      {"pass", r.pass},
  };
  if (r.eta) doc["eta"] = *r.eta;
  for (const auto& [key, value] : r.extras) doc[key] = value;
  return doc.dump(indent);
}

}  // namespace slocc3

#include "localmodel/verify.hpp"

#include "localmodel/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace localmodel {

using algebra::ComputeOptions;
using algebra::Deadline;
using nlohmann::json;

namespace {

std::vector<TypeProfile::Row> parse_profile_rows(const std::string& text) {
  std::vector<TypeProfile::Row> rows;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      for (const auto& jr : json::parse(text)) rows.push_back(jr.get<TypeProfile::Row>());
    } catch (const json::exception& e) {
      throw DomainError(std::string("bad profile JSON: ") + e.what());
    }
    return rows;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    TypeProfile::Row row;
    for (char c : line) {
      if (c == '0' || c == '1') row.push_back(static_cast<std::uint8_t>(c - '0'));
      else if (c != ' ' && c != ',' && c != '\t' && c != '\r')
        throw DomainError(std::string("unexpected character '") + c + "' in profile file");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int parse_index(const std::string& text) {
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0) throw DomainError("bad chart index '" + text + "'");
  return value;
}

} // namespace

PolyIdealSpec chart_ideal(const ChartPresentation& p) {
  for (const auto& x : p.templates) {
    int free_col = -1;
    for (int mu = 0; mu < x.size; ++mu)
      for (int nu = 0; nu < x.size; ++nu)
        if (x.at(mu, nu).kind == TemplateEntry::Kind::Free) {
          if (free_col >= 0 && free_col != nu) return equations_from_presentation(p, VariableNaming::Matrix);
          free_col = nu;
        }
  }
  return equations_from_presentation(p, VariableNaming::Column);
}

ChartSpec chart_for_alcove(const std::string& label, const Alcove& a) {
  const TypeProfile t = profile_of(a);
  const auto p = chart_presentation(chain_profile(a), standard_iwahori_datum(t.n(), t.r()));
  return {label, t.rows(), chart_ideal(p), p.affine_dim, p};
}

std::vector<ChartSpec> select_charts(int n, int r, const std::string& selector) {
  std::vector<ChartSpec> out;
  auto add_extremes = [&] {
    const auto ext = extreme_alcoves(n, r);
    for (std::size_t i = 0; i < ext.size(); ++i) out.push_back(chart_for_alcove("extreme:" + std::to_string(i), ext[i]));
  };
  if (selector == "tau") {
    out.push_back(chart_for_alcove("tau", tau_alcove(n, r)));
  } else if (selector == "default") {
    out.push_back(chart_for_alcove("tau", tau_alcove(n, r)));
    add_extremes();
  } else if (selector == "extremes") {
    add_extremes();
  } else if (selector.starts_with("extreme:")) {
    const auto ext = extreme_alcoves(n, r);
    const int idx = parse_index(selector.substr(8));
    if (idx >= static_cast<int>(ext.size()))
      throw DomainError("extreme index " + std::to_string(idx) + " out of range (there are " +
                        std::to_string(ext.size()) + ")");
    out.push_back(chart_for_alcove(selector, ext[static_cast<std::size_t>(idx)]));
  } else if (selector == "all") {
    const auto adm = enumerate_admissible(n, r);
    for (std::size_t i = 0; i < adm.size(); ++i) out.push_back(chart_for_alcove("alcove:" + std::to_string(i), adm[i]));
  } else {
    const TypeProfile t = read_profile_file(selector);
    if (t.n() != n || t.r() != r || t.m() != n)
      throw DomainError("profile in " + selector + " does not have shape n=" + std::to_string(n) +
                        ", r=" + std::to_string(r));
    const Alcove a = alcove_from_profile(t);
    out.push_back(chart_for_alcove("file:" + selector, a));
  }
  return out;
}

ChartSpec parahoric_chart(int n, int r, const std::vector<int>& chain) {
  auto sorted = chain;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const TypeProfile t = partial_chain_profile(n, r, sorted);
  std::string label = "parahoric:";
  for (std::size_t k = 0; k < sorted.size(); ++k) label += (k ? "," : "") + std::to_string(sorted[k]);
  const auto p = chart_presentation(t, partial_chain_datum(n, r, sorted));
  if (sorted.size() == 2) {
    auto pair = equations_parahoric_pair(n, r, sorted[1] - sorted[0]);
    return {label, t.rows(), std::move(pair.ideal), pair.affine_dim, p};
  }
  return {label, t.rows(), chart_ideal(p), p.affine_dim, p};
}

TypeProfile read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read profile file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto rows = parse_profile_rows(buf.str());
  if (rows.empty()) throw DomainError("profile file '" + path + "' has no rows");
  return TypeProfile(std::move(rows));
}

std::string to_string(ChartStatus s) {
  switch (s) {
  case ChartStatus::Pass: return "pass";
  case ChartStatus::Fail: return "fail";
  case ChartStatus::Timeout: return "timeout";
  case ChartStatus::Error: return "error";
  }
  return "error";
}

ChartReport verify_chart(const ChartSpec& chart, int expected_dim, const VerifyOptions& opts) {
  ChartReport rep;
  rep.label = chart.label;
  rep.profile = chart.profile;
  rep.ideal = chart.ideal;
  rep.field = opts.field;
  rep.affine_dim = chart.affine_dim;
  rep.expected_dim = expected_dim;
  const auto start = std::chrono::steady_clock::now();
  try {
    const ComputeOptions compute{algebra::MonomialOrder::degrevlex(), Deadline::after(opts.timeout)};
    rep.flat = algebra::flatness_check(chart.ideal, opts.field, compute);
    const auto special = algebra::specialize_pi(chart.ideal);
    rep.dim_special = algebra::krull_dimension(special, opts.field, compute) + chart.affine_dim;
    rep.dim_generic = algebra::generic_fibre_dimension(chart.ideal, opts.field, compute) + chart.affine_dim;
    rep.radical = algebra::radical_certificate(special, opts.field, opts.radical_orders, compute.deadline);

    std::vector<std::string> problems;
    if (!*rep.flat) problems.push_back("π is a zero divisor");
    if (*rep.dim_special != expected_dim) problems.push_back("special fibre dimension " + std::to_string(*rep.dim_special));
    if (*rep.dim_generic != expected_dim) problems.push_back("generic fibre dimension " + std::to_string(*rep.dim_generic));
    if (opts.require_radical && *rep.radical != algebra::RadicalCertificate::CertifiedRadical)
      problems.push_back("special fibre not certified reduced");
    rep.status = problems.empty() ? ChartStatus::Pass : ChartStatus::Fail;
    for (std::size_t i = 0; i < problems.size(); ++i) rep.message += (i ? "; " : "") + problems[i];
  } catch (const Timeout&) {
    rep.status = ChartStatus::Timeout;
    rep.message = "exceeded " + std::to_string(opts.timeout.count()) + " ms";
  } catch (const std::exception& e) {
    rep.status = ChartStatus::Error;
    rep.message = e.what();
  }
  if (!opts.deterministic)
    rep.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<ChartReport> verify_charts(const std::vector<ChartSpec>& charts, int expected_dim,
                                       const VerifyOptions& opts) {
  std::vector<ChartReport> out(charts.size());
  const auto count = static_cast<long>(charts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = verify_chart(charts[idx], expected_dim, opts);
  }
  return out;
}

ChartStatus VerifySummary::status() const {
  auto rank = [](ChartStatus s) {
    switch (s) {
    case ChartStatus::Pass: return 0;
    case ChartStatus::Error: return 1;
    case ChartStatus::Fail: return 2;
    case ChartStatus::Timeout: return 3;
    }
    return 1;
  };
  ChartStatus worst = ChartStatus::Pass;
  for (const auto& c : charts)
    if (rank(c.status) > rank(worst)) worst = c.status;
  return worst;
}

std::string report_to_json(const VerifySummary& summary) {
  auto optional_json = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  json charts = json::array();
  for (const auto& c : summary.charts) {
    json gens = json::array();
    for (const auto& g : c.ideal.generators) gens.push_back(algebra::to_string(g, c.ideal.variables));
    charts.push_back({
        {"chart", c.label},
        {"profile", c.profile},
        {"ideal", {{"vars", c.ideal.variables}, {"gens", gens}}},
        {"field", c.field.name()},
        {"flat", optional_json(c.flat)},
        {"dim_special", optional_json(c.dim_special)},
        {"dim_generic", optional_json(c.dim_generic)},
        {"expected_dim", c.expected_dim},
        {"affine_dim", c.affine_dim},
        {"radical_cert", c.radical ? json(algebra::to_string(*c.radical)) : json(nullptr)},
        {"wall_ms", c.wall_ms},
        {"status", to_string(c.status)},
        {"message", c.message},
    });
  }
  json out = {
      {"n", summary.n},
      {"r", summary.r},
      {"parahoric", summary.parahoric.empty() ? json(nullptr) : json(summary.parahoric)},
      {"field", summary.charts.empty() ? json(nullptr) : json(summary.charts.front().field.name())},
      {"status", to_string(summary.status())},
      {"charts", charts},
  };
  return out.dump(2) + "\n";
}

std::chrono::milliseconds timeout_from_env(std::chrono::milliseconds fallback) {
  const char* env = std::getenv("LOCALMODEL_TIMEOUT_SECS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const double secs = std::strtod(env, &end);
  if (end == env || *end != '\0' || secs <= 0) throw DomainError("LOCALMODEL_TIMEOUT_SECS must be a positive number");
  return std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
}

} // namespace localmodel

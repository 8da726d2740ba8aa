#include "localmodel/errors.hpp"
#include "localmodel/groebner.hpp"
#include "localmodel/model.hpp"
#include "localmodel/poset.hpp"
#include "localmodel/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace localmodel;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFailed = 3;

struct Config {
  int n = 0;
  int r = 0;
  std::string chart = "tau";
  std::vector<int> parahoric;
  std::vector<int> generic_tuple;
  std::string target = "pi";
  std::string field = "Q";
  std::string format;
  std::string output;
  std::string what = "ideal";
  std::string order = "degrevlex";
  double timeout_secs = 0;
  bool deterministic = false;
  bool require_radical = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

void require_rank(const Config& c) {
  if (c.n < 2 || c.r <= 0 || c.r >= c.n)
    throw UsageError("need 0 < r < n with n >= 2 (got n=" + std::to_string(c.n) + ", r=" + std::to_string(c.r) + ")");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "'");
}

std::vector<ChartSpec> charts_for(const Config& c) {
  if (!c.parahoric.empty()) {
    for (int i : c.parahoric)
      if (i < 0 || i >= c.n) throw UsageError("--parahoric indices must lie in [0, n)");
    return {parahoric_chart(c.n, c.r, c.parahoric)};
  }
  try {
    return select_charts(c.n, c.r, c.chart);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

ChartSpec single_chart(const Config& c) {
  auto charts = charts_for(c);
  if (charts.size() != 1) throw UsageError("selector '" + c.chart + "' names " + std::to_string(charts.size()) + " charts; pick one");
  return std::move(charts.front());
}

algebra::Field parse_field(const std::string& text) {
  try {
    return algebra::Field::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int cmd_alcoves(const Config& c) {
  require_rank(c);
  require_format(c.format.empty() ? "json" : c.format, {"json"});
  write_output(alcoves_to_json(c.n, c.r, enumerate_admissible(c.n, c.r)), c.output);
  return kExitOk;
}

int cmd_poset(const Config& c) {
  require_rank(c);
  const std::string format = c.format.empty() ? "json" : c.format;
  require_format(format, {"json", "dot"});
  const auto poset = strata_poset(c.n, c.r);
  write_output(format == "dot" ? poset_to_dot(poset) : poset_to_json(poset), c.output);
  return kExitOk;
}

std::string ideal_text(const PolyIdealSpec& ideal, const std::string& format) {
  return format == "json" ? to_json(ideal) + "\n" : to_text(ideal);
}

int cmd_equations(const Config& c) {
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"text", "json"});
  PolyIdealSpec ideal;
  if (!c.generic_tuple.empty()) {
    if (c.generic_tuple.size() != 2) throw UsageError("--generic-tuple takes M,K");
    if (c.target != "pi" && c.target != "zero") throw UsageError("--target is pi or zero");
    try {
      ideal = equations_generic_tuple(c.generic_tuple[0], c.generic_tuple[1],
                                      c.target == "pi" ? Target::Pi : Target::Zero);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  } else {
    require_rank(c);
    ideal = single_chart(c).ideal;
  }
  write_output(ideal_text(ideal, format), c.output);
  auto& log = c.output.empty() || c.output == "-" ? std::cerr : std::cout;
  log << "raw_generators: " << ideal.raw_count << "\n"
      << "generators: " << ideal.generators.size() << "\n";
  return kExitOk;
}

json presentation_json(const ChartSpec& chart) {
  const auto& p = chart.presentation;
  json templates = json::array();
  for (const auto& x : p.templates) {
    json rows = json::array();
    std::istringstream in(x.to_string());
    std::string line;
    while (std::getline(in, line)) {
      json row = json::array();
      std::istringstream cells(line.substr(1, line.size() - 2));
      std::string cell;
      while (cells >> cell) row.push_back(cell);
      rows.push_back(row);
    }
    templates.push_back(rows);
  }
  return {{"chart", chart.label}, {"m", p.m}, {"k", p.k}, {"s", p.s}, {"t", p.t}, {"affine_dim", p.affine_dim},
          {"zero_columns", p.zero_columns}, {"one_columns", p.one_columns},
          {"quotient_basis", p.quotient_basis}, {"free_variables", p.free_variables}, {"templates", templates}};
}

int cmd_export(const Config& c) {
  require_rank(c);
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"text", "json"});
  const auto chart = single_chart(c);
  if (c.what == "ideal") {
    write_output(ideal_text(chart.ideal, format), c.output);
  } else if (c.what == "groebner") {
    algebra::MonomialOrder order;
    if (c.order == "degrevlex") order = algebra::MonomialOrder::degrevlex();
    else if (c.order == "lex") order = algebra::MonomialOrder::lex();
    else throw UsageError("--order is degrevlex or lex");
    const auto field = parse_field(c.field);
    const auto gb = algebra::buchberger(chart.ideal, order, field);
    const PolyIdealSpec basis{gb.variables, gb.elements, gb.elements.size()};
    if (format == "json") {
      auto j = json::parse(to_json(basis));
      j["order"] = order.name();
      j["field"] = field.name();
      write_output(j.dump() + "\n", c.output);
    } else {
      write_output(to_text(basis), c.output);
    }
  } else if (c.what == "presentation") {
    if (format == "json") {
      write_output(presentation_json(chart).dump(2) + "\n", c.output);
    } else {
      std::ostringstream os;
      const auto& p = chart.presentation;
      os << "chart: " << chart.label << "\nk: " << p.k << "\ns: " << p.s << "\nt: " << p.t
         << "\naffine_dim: " << p.affine_dim << "\n";
      for (std::size_t i = 0; i < p.templates.size(); ++i) os << "X" << i << ":\n" << p.templates[i].to_string() << "\n";
      write_output(os.str(), c.output);
    }
  } else {
    throw UsageError("--what is ideal, groebner or presentation");
  }
  return kExitOk;
}

int cmd_verify(const Config& c) {
  require_rank(c);
  require_format(c.format.empty() ? "json" : c.format, {"json"});
  VerifyOptions opts;
  opts.field = parse_field(c.field);
  opts.deterministic = c.deterministic;
  opts.require_radical = c.require_radical;
  try {
    opts.timeout = c.timeout_secs > 0 ? std::chrono::milliseconds(static_cast<long long>(c.timeout_secs * 1000))
                                      : timeout_from_env(std::chrono::seconds(600));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  VerifySummary summary{c.n, c.r, c.parahoric, {}};
  std::sort(summary.parahoric.begin(), summary.parahoric.end());
  summary.charts = verify_charts(charts_for(c), c.r * (c.n - c.r), opts);
  write_output(report_to_json(summary), c.output);
  for (const auto& rep : summary.charts) {
    std::cerr << rep.label << ": " << to_string(rep.status);
    if (!rep.message.empty()) std::cerr << " (" << rep.message << ")";
    std::cerr << "\n";
  }
  return summary.status() == ChartStatus::Pass ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alcoves, chart equations and flatness checks for local models"};
  app.require_subcommand(1);
  Config c;

  auto add_rank = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Module rank n")->required();
    sub->add_option("--r", c.r, "Subspace rank r")->required();
  };
  auto add_output = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", c.format, "Output format: " + formats);
    sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  };
  auto add_chart = [&](CLI::App* sub, const std::string& fallback) {
    c.chart = fallback;
    sub->add_option("--chart,--charts", c.chart,
                    "tau | extreme:<i> | extremes | default | all | <profile file>")
        ->default_str(fallback);
    sub->add_option("--parahoric", c.parahoric, "Chain indices I, e.g. 0,2")->delimiter(',');
  };

  auto* alcoves = app.add_subcommand("alcoves", "List the admissible alcoves");
  add_rank(alcoves);
  add_output(alcoves, "json");

  auto* poset = app.add_subcommand("poset", "Closure order on the strata");
  add_rank(poset);
  add_output(poset, "json | dot");

  auto* equations = app.add_subcommand("equations", "Chart equations in the ideal text format");
  equations->add_option("--n", c.n, "Module rank n");
  equations->add_option("--r", c.r, "Subspace rank r");
  add_chart(equations, "tau");
  equations->add_option("--generic-tuple", c.generic_tuple, "M,K: generic k×k matrices with cyclic products")
      ->delimiter(',');
  equations->add_option("--target", c.target, "Cyclic products equal pi or zero")->default_str("pi");
  add_output(equations, "text | json");

  auto* verify = app.add_subcommand("verify", "Flatness, dimensions and reducedness per chart");
  add_rank(verify);
  verify->add_option("--chart,--charts", c.chart, "tau | extreme:<i> | extremes | default | all | <profile file>");
  verify->add_option("--parahoric", c.parahoric, "Chain indices I, e.g. 0,2")->delimiter(',');
  verify->add_option("--field", c.field, "Q or Fp:<prime>")->default_str("Q");
  verify->add_option("--timeout", c.timeout_secs, "Seconds per chart (default: LOCALMODEL_TIMEOUT_SECS or 600)");
  verify->add_flag("--deterministic", c.deterministic, "Report wall_ms as 0 so reruns are byte-identical");
  verify->add_flag("--require-radical", c.require_radical, "Fail charts whose special fibre is not certified reduced");
  add_output(verify, "json");

  auto* exporter = app.add_subcommand("export", "Ideal, Gröbner basis or presentation of one chart");
  add_rank(exporter);
  add_chart(exporter, "tau");
  exporter->add_option("--what", c.what, "ideal | groebner | presentation")->default_str("ideal");
  exporter->add_option("--field", c.field, "Q or Fp:<prime>")->default_str("Q");
  exporter->add_option("--order", c.order, "degrevlex | lex")->default_str("degrevlex");
  add_output(exporter, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // verify defaults to τ plus the extreme charts.
  if (verify->parsed() && verify->count("--chart") == 0) c.chart = "default";

  try {
    if (alcoves->parsed()) return cmd_alcoves(c);
    if (poset->parsed()) return cmd_poset(c);
    if (equations->parsed()) return cmd_equations(c);
    if (verify->parsed()) return cmd_verify(c);
    if (exporter->parsed()) return cmd_export(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Timeout&) {
    std::cerr << "error: timed out\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "document.hpp"
#include "radii/asymmetry.hpp"
#include "radii/completeness.hpp"
#include "radii/errors.hpp"
#include "radii/harness/suites.hpp"
#include "radii/radii.hpp"

namespace radii::cli {

using ojson = nlohmann::ordered_json;

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

constexpr int kDecimalDigits = 12;

ojson num(const Scalar& s) { return ojson{{"exact", s.str()}, {"decimal", s.decimal(kDecimalDigits)}}; }

ojson num(const Vector& v) {
  ojson ex = ojson::array(), dec = ojson::array();
  for (const auto& c : v) {
    ex.push_back(c.str());
    dec.push_back(c.decimal(kDecimalDigits));
  }
  return ojson{{"exact", std::move(ex)}, {"decimal", std::move(dec)}};
}

ojson vertex_list(const VPolytope& p) { return to_document(p)["vertices"]; }

ojson halfspace_list(const HPolytope& p) {
  ojson rows = ojson::array();
  for (const auto& h : p.halfspaces()) {
    ojson n = ojson::array();
    for (const auto& c : h.normal) n.push_back(c.str());
    rows.push_back(ojson{{"normal", std::move(n)}, {"offset", h.offset.str()}});
  }
  return rows;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Loaded inputs with their digests, in command-line order.
class Inputs {
 public:
  VPolytope body(const std::string& path) { return to_vpolytope(load(path)); }
  Gauge gauge(const std::string& path) { return Gauge(to_vpolytope(load(path))); }
  const ojson& digests() const { return digests_; }

 private:
  PolytopeDocument load(const std::string& path) {
    std::string raw;
    PolytopeDocument doc = read_document(path, &raw);
    digests_.push_back(ojson{{"path", path}, {"fnv1a64", hex64(fnv1a64(raw))}});
    return doc;
  }
  ojson digests_ = ojson::array();
};

void require_same_dim(const VPolytope& k, const Gauge& b) {
  if (k.dim() != b.dim()) {
    throw InputError("body has dimension " + std::to_string(k.dim()) + " but gauge has dimension " +
                     std::to_string(b.dim()));
  }
}

struct Output {
  ojson quantities = ojson::object();
  ojson certificates = ojson::object();
  ojson suite_results;  // verify only
  int exit_code = kExitOk;
};

Output cmd_radii(Inputs& in, const std::string& body, const std::string& gauge) {
  const VPolytope k = in.body(body);
  const Gauge b = in.gauge(gauge);
  require_same_dim(k, b);
  const RadiiReport r = radii_report(k, b);
  Output o;
  o.quantities = ojson{{"R", num(r.R)}, {"r", num(r.r)}, {"D", num(r.D)}, {"w", num(r.w)}};
  o.certificates = ojson{{"circumcenter", num(r.circumcenter)},
                         {"incenter", num(r.incenter)},
                         {"diameter_pair", ojson::array({num(r.diameter_pair.first), num(r.diameter_pair.second)})},
                         {"width_certificate", num(r.width_certificate)},
                         {"containments_verified", true}};
  return o;
}

Output cmd_asymmetry(Inputs& in, const std::string& body, bool restrict_to_hull) {
  const VPolytope k = in.body(body);
  const AsymmetryResult a = minkowski_asymmetry(k, restrict_to_hull);
  Output o;
  o.quantities = ojson{{"s", num(a.s)}};
  o.certificates = ojson{{"translation", num(a.translation)},
                         {"center", num(a.center)},
                         {"centered_body", vertex_list(a.centered_body)}};
  if (k.full_dimensional()) {
    const SandwichCertificate c = bm_sandwich(k);
    o.certificates["sandwich"] = ojson{{"inner_factor", num(c.inner_factor)},
                                       {"outer_factor", num(c.outer_factor)},
                                       {"inner_verified", c.inner_verified},
                                       {"outer_verified", c.outer_verified}};
  }
  return o;
}

Output cmd_jung(Inputs& in, const std::string& body, const std::string& gauge) {
  const VPolytope k = in.body(body);
  const Gauge b = in.gauge(gauge);
  require_same_dim(k, b);
  const Ball c = circumradius(k, b);
  const DiameterResult d = diameter(k, b);
  if (d.value.is_zero()) throw InputError("jung: body is a single point");
  Output o;
  o.quantities = ojson{{"j", num(c.radius / d.value)}, {"R", num(c.radius)}, {"D", num(d.value)}};
  o.certificates = ojson{{"circumcenter", num(c.center)},
                         {"diameter_pair", ojson::array({num(d.from), num(d.to)})}};
  return o;
}

Output cmd_complete(Inputs& in, const std::string& body, const std::string& gauge) {
  const VPolytope k = in.body(body);
  const Gauge b = in.gauge(gauge);
  require_same_dim(k, b);
  const CompletionReport r = completion_report(k, b);
  Output o;
  o.quantities = ojson{{"complete", r.complete}, {"constant_width", r.constant_width},
                       {"D", num(r.D)},          {"R", num(r.R)},
                       {"r", num(r.r)}};
  o.certificates = ojson{{"ball_hull", halfspace_list(r.ball_hull)},
                         {"pseudo_completion",
                          ojson{{"vertices", vertex_list(r.pseudo_completion)},
                                {"D", num(r.D_plus)},
                                {"R", num(r.R_plus)},
                                {"r", num(r.r_plus)}}}};
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError(path + ": cannot write file");
  f << text;
}

Output cmd_pseudo(Inputs& in, const std::string& body, const std::string& gauge, const std::string& out_path) {
  const VPolytope k = in.body(body);
  const Gauge b = in.gauge(gauge);
  require_same_dim(k, b);
  const Ball c = circumradius(k, b);
  const Scalar d = diameter(k, b).value;
  const VPolytope plus = pseudo_completion(k, b);
  Output o;
  o.quantities = ojson{{"D", num(d)}, {"R", num(c.radius)}, {"vertex_count", plus.size()}};
  o.certificates = ojson{{"circumcenter", num(c.center)}, {"pseudo_completion", vertex_list(plus)}};
  if (!out_path.empty()) write_file(out_path, to_document(plus).dump(2) + "\n");
  return o;
}

Output cmd_completion(Inputs& in, const std::string& body, const std::string& gauge, size_t max_rounds) {
  const VPolytope k = in.body(body);
  const Gauge b = in.gauge(gauge);
  require_same_dim(k, b);
  const GreedyCompletion g = greedy_completion(k, b, max_rounds);
  Output o;
  o.quantities = ojson{{"converged", g.converged}, {"rounds", g.rounds}, {"D", num(diameter(g.body, b).value)}};
  o.certificates = ojson{{"body", vertex_list(g.body)}};
  return o;
}

ojson suite_json(const harness::SuiteResult& r) {
  ojson failures = ojson::array();
  for (const auto& f : r.failures) {
    failures.push_back(ojson{{"seed", f.seed}, {"quantity", f.quantity}, {"expected", f.expected}, {"got", f.got}});
  }
  return ojson{{"suite", r.suite}, {"cases", r.cases}, {"pass", r.pass()}, {"failures", std::move(failures)},
               {"notes", r.notes}};
}

Output cmd_verify(const std::vector<std::string>& suites, uint64_t seed, std::optional<size_t> cases, bool matrix) {
  Output o;
  o.suite_results = ojson::array();
  size_t failed = 0;
  for (const auto& name : suites) {
    const harness::SuiteResult r = harness::run_suite(name, {seed, cases});
    if (!r.pass()) ++failed;
    o.suite_results.push_back(suite_json(r));
  }
  o.quantities = ojson{{"suites", suites.size()}, {"failed", failed}};
  if (matrix) {
    ojson rows = ojson::array();
    for (const auto& t : harness::traceability_matrix()) {
      rows.push_back(ojson{{"statement", t.statement}, {"suites", t.suites}, {"coverage", t.coverage}});
    }
    o.certificates["traceability_matrix"] = std::move(rows);
  }
  o.exit_code = failed == 0 ? kExitOk : kExitSuiteFailure;
  return o;
}

// --- table rendering -------------------------------------------------------

void flatten(const ojson& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && j.contains("exact") && j.contains("decimal") && j.size() == 2) {
    const auto join = [](const ojson& a) {
      if (!a.is_array()) return a.get<std::string>();
      std::string s = "(";
      for (size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
      return s + ")";
    };
    rows.emplace_back(key, join(j["exact"]) + "  ~ " + join(j["decimal"]));
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, key.empty() ? k : key + "." + k, rows);
  } else if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const ojson& e) { return e.is_string(); })) {
    std::string s = "(";
    for (size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + j[i].get<std::string>();
    rows.emplace_back(key, s + ")");
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "[" + std::to_string(i) + "]", rows);
    if (j.empty()) rows.emplace_back(key, "[]");
  } else if (j.is_string()) {
    rows.emplace_back(key, j.get<std::string>());
  } else {
    rows.emplace_back(key, j.dump());
  }
}

std::string render_table(const ojson& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact radii, asymmetry and completeness of polytopes in polytopal norms", "radii-lab"};
  app.require_subcommand(1);
  bool table = false, timestamp = false;
  app.add_flag("--table", table, "Aligned human-readable output instead of JSON");
  app.add_flag("--timestamp", timestamp, "Add a UTC timestamp to the report");

  std::string body, gauge, out_path;
  bool restrict_to_hull = false;
  size_t max_rounds = 50;
  std::string suite;
  bool all = false, matrix = false;
  uint64_t seed = 1;
  std::optional<size_t> cases;
  std::function<Output(Inputs&)> action;

  auto body_gauge = [&](CLI::App* sub) {
    sub->add_option("body", body, "Body document")->required();
    sub->add_option("gauge", gauge, "Gauge document")->required();
  };

  auto* radii_cmd = app.add_subcommand("radii", "R, r, D, w with witnesses");
  body_gauge(radii_cmd);
  radii_cmd->callback([&] { action = [&](Inputs& in) { return cmd_radii(in, body, gauge); }; });

  auto* asym = app.add_subcommand("asymmetry", "Minkowski asymmetry and center");
  asym->add_option("body", body, "Body document")->required();
  asym->add_flag("--restrict-to-hull", restrict_to_hull, "Measure a lower-dimensional body inside its affine hull");
  asym->callback([&] { action = [&](Inputs& in) { return cmd_asymmetry(in, body, restrict_to_hull); }; });

  auto* jung = app.add_subcommand("jung", "Jung ratio R/D");
  body_gauge(jung);
  jung->callback([&] { action = [&](Inputs& in) { return cmd_jung(in, body, gauge); }; });

  auto* complete = app.add_subcommand("complete", "Completeness and constant width");
  body_gauge(complete);
  complete->callback([&] { action = [&](Inputs& in) { return cmd_complete(in, body, gauge); }; });

  auto* pseudo = app.add_subcommand("pseudo", "Pseudo-completion");
  body_gauge(pseudo);
  pseudo->add_option("--out", out_path, "Write the pseudo-completion as a polytope document");
  pseudo->callback([&] { action = [&](Inputs& in) { return cmd_pseudo(in, body, gauge, out_path); }; });

  auto* completion = app.add_subcommand("completion", "Greedy completion heuristic");
  body_gauge(completion);
  completion->add_option("--max-rounds", max_rounds, "Maximum number of adjoined vertices")->check(CLI::PositiveNumber);
  completion->callback([&] { action = [&](Inputs& in) { return cmd_completion(in, body, gauge, max_rounds); }; });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto* suite_opt = verify->add_option("--suite", suite, "Suite name");
  auto* all_opt = verify->add_flag("--all", all, "Run every suite");
  suite_opt->excludes(all_opt);
  verify->add_option("--seed", seed, "Base seed");
  verify->add_option("--cases", cases, "Number of random cases");
  verify->add_flag("--matrix", matrix, "Include the traceability matrix");
  verify->callback([&] {
    if (!all && suite.empty()) throw CLI::ValidationError("verify", "one of --suite or --all is required");
    action = [&](Inputs&) {
      return cmd_verify(all ? harness::suite_names() : std::vector<std::string>{suite}, seed, cases, matrix);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "radii-lab: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    Inputs in;
    Output o = action(in);
    ojson report;
    std::string command = "radii-lab";
    for (const auto& a : args) command += " " + a;
    report["command"] = command;
    report["input_digests"] = in.digests();
    report["quantities"] = std::move(o.quantities);
    report["certificates"] = std::move(o.certificates);
    if (!o.suite_results.is_null()) report["suite_results"] = std::move(o.suite_results);
    if (timestamp) report["timestamp"] = utc_timestamp();
    out << (table ? render_table(report) : report.dump(2) + "\n");
    return o.exit_code;
  } catch (const ValidationError& e) {
    err << "radii-lab: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapabilityError& e) {
    err << "radii-lab: capability error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const InputError& e) {
    err << "radii-lab: input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "radii-lab: internal error: " << e.what() << "\n";
    return kExitSuiteFailure;
  }
}

}  // namespace radii::cli

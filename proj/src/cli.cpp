#include "satake/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "satake/epsilon.hpp"
#include "satake/json_io.hpp"
#include "satake/selftest.hpp"
#include "satake/verdict.hpp"

namespace satake::cli {

namespace {

struct UnknownName {
  std::string name;
};

struct UsageError {
  std::string message;
};

class Session {
 public:
  Session(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out), records_(catalog(cfg.rank_bound)) {}

  bool json() const { return cfg_.output_mode == OutputMode::Json; }

  const RealFormRecord& lookup(const std::string& name) const {
    const RealFormRecord* rec = find_record(records_, name);
    if (!rec) throw UnknownName{name};
    return *rec;
  }

  // A catalogue name or a diagram literal in the canonical text format.
  std::pair<std::string, SatakeDiagram> resolve(const std::string& arg) const {
    if (arg.find("black=") == std::string::npos) {
      const RealFormRecord& rec = lookup(arg);
      return {rec.name(), rec.diagram};
    }
    SatakeDiagram d;
    try {
      d = parse_diagram(arg);
    } catch (const ParseError& e) {
      throw UsageError{std::string("cannot parse diagram: ") + e.what()};
    }
    const ValidationReport r = validate(d);
    if (!r.ok()) throw UsageError{"invalid Satake diagram: " + r.summary()};
    return {format_diagram(d), d};
  }

  void list() const {
    if (json()) {
      Json arr = Json::array();
      for (const auto& rec : records_) arr.push_back(record_json(rec));
      out_ << arr.dump(2) << '\n';
      return;
    }
    for (const auto& rec : records_) {
      out_ << rec.name();
      if (rec.names.size() > 1) {
        out_ << "  (also:";
        for (std::size_t k = 1; k < rec.names.size(); ++k) out_ << (k > 1 ? ", " : " ") << rec.names[k];
        out_ << ')';
      }
      out_ << '\n';
    }
  }

  void show(const std::string& name) const {
    const RealFormRecord& rec = lookup(name);
    if (json()) {
      out_ << record_json(rec).dump(2) << '\n';
      return;
    }
    out_ << "names: ";
    for (std::size_t k = 0; k < rec.names.size(); ++k) out_ << (k ? ", " : "") << rec.names[k];
    out_ << "\ndiagram: " << format_diagram(rec.diagram) << '\n';
    if (!rec.notes.empty()) out_ << "notes: " << rec.notes << '\n';
    out_ << '\n' << render_diagram(rec.diagram, cfg_.color);
  }

  void epsilon(const std::string& arg) const {
    const auto [label, d] = resolve(arg);
    const NodePermutation eps = epsilon_sigma(d);
    if (json()) {
      Json j;
      j["name"] = label;
      j["diagram"] = format_diagram(d);
      j["epsilon"] = permutation_json(eps);
      j["is_identity"] = eps.is_identity();
      out_ << j.dump(2) << '\n';
      return;
    }
    out_ << describe_permutation(eps) << '\n' << "is_identity: " << (eps.is_identity() ? "true" : "false") << '\n';
  }

  void classify_all() const {
    const ClassificationTable table = classify(records_);
    if (json()) {
      out_ << classification_json(table).dump(2) << '\n';
      return;
    }
    std::size_t width = 4;
    for (const auto& row : table.rows) width = std::max(width, row.name.size());
    out_ << std::left << std::setw(static_cast<int>(width)) << "name" << "  " << std::setw(6) << "type"
         << "  " << std::setw(11) << "is_identity" << "  epsilon\n";
    for (const auto& row : table.rows) {
      std::string flag = row.is_identity ? "true" : "false";
      const std::string pad(11 - flag.size(), ' ');
      if (cfg_.color) flag = (row.is_identity ? "\x1b[32m" : "\x1b[31m") + flag + "\x1b[0m";
      out_ << std::setw(static_cast<int>(width)) << row.name << "  " << std::setw(6) << row.type << "  " << flag
           << pad << "  " << describe_permutation(row.epsilon) << '\n';
    }
  }

  void restricted(const std::string& arg) const {
    const auto [label, d] = resolve(arg);
    const RestrictedRootData data = restricted_roots(d);
    if (json()) {
      out_ << restricted_json(data).dump(2) << '\n';
      return;
    }
    out_ << "type: " << (data.type_label.empty() ? "empty" : data.type_label) << '\n';
    out_ << "sigma_plus (simple-root coordinates, multiplicity):\n";
    for (const RootVector& v : data.sigma_plus)
      out_ << "  " << halves(v) << "  x" << data.multiplicities.at(v) << '\n';
    out_ << "base:\n";
    for (const RootVector& v : data.base) out_ << "  " << halves(v) << '\n';
  }

  void weights(const std::string& arg, const std::vector<std::string>& coords) const {
    const auto [label, d] = resolve(arg);
    Weight w;
    for (const std::string& chunk : coords) {
      std::stringstream ss(chunk);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
          std::size_t used = 0;
          w.coords.push_back(std::stoi(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw UsageError{"bad weight coordinate '" + item + "'"};
        }
      }
    }
    if (static_cast<int>(w.size()) != d.rank())
      throw UsageError{"expected " + std::to_string(d.rank()) + " weight coordinates, got " + std::to_string(w.size())};
    const Weight image = act_on_weight(d, w);
    if (json()) {
      Json j;
      j["weight"] = w.coords;
      j["image"] = image.coords;
      out_ << j.dump(2) << '\n';
      return;
    }
    out_ << to_string(image) << '\n';
  }

  void verdict(const std::string& arg, const SubgroupHypotheses& h) const {
    const auto [label, d] = resolve(arg);
    const StructureVerdict v = real_structure_verdict(d, h);
    if (json()) {
      out_ << verdict_json(v).dump(2) << '\n';
      return;
    }
    out_ << "conjugacy_of_sigma_H: " << to_string(v.conjugacy_of_sigma_H) << '\n'
         << "mu0_exists: " << (v.mu0_exists ? "true" : "false") << '\n'
         << "real_structure_on_GH: " << to_string(v.real_structure_on_GH) << '\n'
         << "wonderful_completion: " << to_string(v.wonderful_completion) << '\n'
         << "citations:";
    for (const auto& c : v.citations) out_ << ' ' << c;
    out_ << '\n';
    for (const auto& c : v.caveats) out_ << "caveat: " << c << '\n';
  }

  bool selftest() const {
    const SelfTestReport report = run_invariant_suite(records_);
    if (json()) {
      Json checks = Json::array();
      for (const auto& c : report.checks()) {
        Json j;
        j["name"] = c.name;
        j["checked"] = c.checked;
        j["failures"] = c.failures;
        checks.push_back(j);
      }
      Json j;
      j["ok"] = report.ok();
      j["checks"] = checks;
      out_ << j.dump(2) << '\n';
      return report.ok();
    }
    for (const auto& c : report.checks()) {
      out_ << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " checked)\n";
      for (const auto& f : c.failures) out_ << "  " << f << '\n';
    }
    out_ << (report.ok() ? "selftest passed" : "selftest FAILED") << " over " << records_.size() << " records\n";
    return report.ok();
  }

 private:
  static std::string halves(const RootVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      const int c = v[i];
      s += (i ? "," : "");
      s += c % 2 == 0 ? std::to_string(c / 2) : std::to_string(c) + "/2";
    }
    return s + ")";
  }

  const CliConfig& cfg_;
  std::ostream& out_;
  std::vector<RealFormRecord> records_;
};

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Satake diagrams, the automorphism eps_sigma and equivariant real structures", "satake"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  bool json = false;
  bool color = false;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--rank-bound", cfg.rank_bound, "Largest rank of catalogue entries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--color,!--no-color", color, "Colour text output (disabled by NO_COLOR)");

  std::string name;
  std::vector<std::string> coords;
  SubgroupHypotheses hyp;

  auto* list = app.add_subcommand("list", "List all catalogue names");
  auto* show = app.add_subcommand("show", "Draw a Satake diagram with its metadata");
  show->add_option("name", name, "Real form name")->required();
  auto* eps = app.add_subcommand("epsilon", "Compute eps_sigma for a real form or diagram literal");
  eps->add_option("form", name, "Real form name or diagram such as 'A3 black=1,3 arrows='")->required();
  auto* cls = app.add_subcommand("classify", "Tabulate eps_sigma over the whole catalogue");
  auto* res = app.add_subcommand("restricted", "Restricted roots with multiplicities");
  res->add_option("form", name, "Real form name or diagram literal")->required();
  auto* wts = app.add_subcommand("weights", "Apply eps_sigma to a weight in fundamental-weight coordinates");
  wts->add_option("form", name, "Real form name or diagram literal")->required();
  wts->add_option("coords", coords, "Coordinates, e.g. 1,0,2")->required();
  auto* ver = app.add_subcommand("verdict", "Equivariant real structure verdict");
  ver->add_option("form", name, "Real form name or diagram literal")->required();
  ver->add_flag("--spherical", hyp.spherical, "H is spherical");
  ver->add_flag("--self-normalizing", hyp.self_normalizing, "H is self-normalizing");
  auto* self = app.add_subcommand("selftest", "Check all invariants over the catalogue");

  try {
    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  cfg.output_mode = json ? OutputMode::Json : OutputMode::Text;
  cfg.color = color && std::getenv("NO_COLOR") == nullptr;

  try {
    const Session s(cfg, out);
    if (list->parsed()) s.list();
    else if (show->parsed()) s.show(name);
    else if (eps->parsed()) s.epsilon(name);
    else if (cls->parsed()) s.classify_all();
    else if (res->parsed()) s.restricted(name);
    else if (wts->parsed()) s.weights(name, coords);
    else if (ver->parsed()) s.verdict(name, hyp);
    else if (self->parsed()) {
      if (!s.selftest()) {
        err << "selftest failed\n";
        return kExitSelfTest;
      }
    }
  } catch (const UnknownName& e) {
    err << "error: unknown real form '" << e.name << "'";
    const auto near = nearest_names(catalog(cfg.rank_bound), e.name);
    if (!near.empty()) {
      err << "; nearest matches:";
      for (std::size_t k = 0; k < near.size(); ++k) err << (k ? ", " : " ") << near[k];
    }
    err << '\n';
    return kExitUnknownName;
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace satake::cli

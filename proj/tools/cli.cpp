#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "code_file.hpp"
#include "gwht/analysis.hpp"
#include "gwht/errors.hpp"
#include "gwht/spectral.hpp"

namespace gwht::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kMaxJsonSafe = std::uint64_t{1} << 53;

ordered_json json_count(std::uint64_t x) {
  if (x > kMaxJsonSafe) return std::to_string(x);
  return x;
}

ordered_json json_integer(const BigInt& x) {
  if (abs(x) > kMaxJsonSafe) return to_string(x);
  return static_cast<std::int64_t>(x);
}

struct Options {
  std::string input;
  std::string method = "auto";
  unsigned start_j = 1;
  bool json = false;
  std::optional<std::uint64_t> budget;
  std::string dump_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::automatic;
  if (name == "transform") return Method::transform;
  return Method::oracle;
}

Budget budget_from(const Options& o) {
  Budget b;
  if (o.budget) b.max_theta = b.max_space = *o.budget;
  return b;
}

// Collects labelled spectra for --dump-spectra.
class SpectrumDump {
 public:
  explicit SpectrumDump(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InputError("cannot write '" + path + "'");
  }

  SpectrumObserver observer() {
    if (!file_) return {};
    return [this](const std::string& label, const ReducedSpectrum& s) {
      *file_ << "# " << label << '\n';
      write_spectrum(*file_, s);
    };
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ordered_json envelope(const LinearCode& code, const char* analysis, std::string_view method) {
  ordered_json j;
  j["q"] = code.field().order();
  j["n"] = code.length();
  j["k"] = code.dimension();
  j["analysis"] = analysis;
  j["method"] = std::string(method);
  return j;
}

ordered_json per_j_json(const std::vector<RoundSummary>& rounds) {
  ordered_json arr = ordered_json::array();
  for (const RoundSummary& r : rounds) arr.push_back({{"j", r.j}, {"nonzero", r.nonzero}});
  return arr;
}

void print_rounds(std::ostream& out, const std::vector<RoundSummary>& rounds) {
  if (rounds.empty()) return;
  out << std::setw(4) << "j" << "  " << "nonzero classes" << '\n';
  for (const RoundSummary& r : rounds) out << std::setw(4) << r.j << "  " << r.nonzero << '\n';
}

ordered_json weights_json(const std::map<unsigned, std::uint64_t>& counts) {
  ordered_json j = ordered_json::object();
  for (const auto& [w, c] : counts) j[std::to_string(w)] = json_count(c);
  return j;
}

ordered_json distribution_json(const std::vector<std::uint64_t>& counts) {
  ordered_json j = ordered_json::object();
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] != 0) j[std::to_string(w)] = json_count(counts[w]);
  }
  return j;
}

void print_distribution(std::ostream& out, const std::vector<std::uint64_t>& counts) {
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] != 0) out << "A_" << w << " = " << counts[w] << '\n';
  }
}

void print_leaders(std::ostream& out, const CosetLeaderProfile& profile) {
  out << std::setw(6) << "weight" << "  " << "cosets" << '\n';
  for (const auto& [w, c] : profile.counts) out << std::setw(6) << w << "  " << c << '\n';
  out << "rho = " << profile.covering_radius << '\n';
}

// Leader counts for weights >= 1; weight 0 is always the code itself.
std::map<unsigned, std::uint64_t> nonzero_leaders(const CosetLeaderProfile& profile) {
  auto counts = profile.counts;
  counts.erase(0);
  return counts;
}

void cmd_weight_dist(const Options& o, std::ostream& out) {
  const LinearCode code = parse_code_file(read_file(o.input));
  const Method method = parse_method(o.method);
  const WeightDistribution d = weight_distribution(code, method, budget_from(o));
  if (o.json) {
    // weight_distribution(automatic) does not report its choice, so recompute it.
    std::string used = o.method == "auto" ? "transform" : o.method;
    if (o.method == "auto") {
      try {
        if (theta(code.field().order(), static_cast<unsigned>(code.dimension())) > budget_from(o).max_theta) {
          used = "oracle";
        }
      } catch (const BudgetError&) {
        used = "oracle";
      }
    }
    ordered_json j = envelope(code, "weight-dist", used);
    j["result"] = distribution_json(d.counts);
    j["per_j"] = ordered_json::array();
    out << j.dump() << '\n';
    return;
  }
  print_distribution(out, d.counts);
}

void cmd_covering_radius(const Options& o, std::ostream& out, std::ostream& err) {
  const LinearCode code = parse_code_file(read_file(o.input));
  SpectrumDump dump(o.dump_path);
  RadiusOptions ro;
  ro.start_j = o.start_j;
  ro.observer = dump.observer();
  const RadiusReport report = covering_radius(code, parse_method(o.method), ro, budget_from(o));
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';
  if (o.json) {
    ordered_json j = envelope(code, "covering-radius", to_string(report.method));
    j["result"] = report.covering_radius;
    j["per_j"] = per_j_json(report.per_j);
    out << j.dump() << '\n';
    return;
  }
  out << "rho = " << report.covering_radius << '\n';
  print_rounds(out, report.per_j);
}

void cmd_coset_leaders(const Options& o, std::ostream& out, std::ostream& err) {
  const LinearCode code = parse_code_file(read_file(o.input));
  SpectrumDump dump(o.dump_path);
  RadiusOptions ro;
  ro.observer = dump.observer();
  const LeaderReport report = coset_leaders(code, parse_method(o.method), ro, budget_from(o));
  for (const std::string& note : report.notes) err << "note: " << note << '\n';
  if (o.json) {
    ordered_json j = envelope(code, "coset-leaders", to_string(report.method));
    j["result"] = weights_json(nonzero_leaders(report.profile));
    j["per_j"] = per_j_json(report.per_j);
    out << j.dump() << '\n';
    return;
  }
  print_leaders(out, report.profile);
}

void cmd_oracle(const Options& o, std::ostream& out) {
  const LinearCode code = parse_code_file(read_file(o.input));
  const Budget budget = budget_from(o);
  const std::vector<std::uint64_t> dist = oracle_weight_distribution(code, budget.max_space);
  const CosetLeaderProfile profile = oracle_coset_profile(code, budget.max_space);
  if (o.json) {
    ordered_json j = envelope(code, "oracle", "oracle");
    j["result"] = {{"weight_distribution", distribution_json(dist)},
                   {"covering_radius", profile.covering_radius},
                   {"coset_leaders", weights_json(nonzero_leaders(profile))}};
    j["per_j"] = ordered_json::array();
    out << j.dump() << '\n';
    return;
  }
  print_distribution(out, dist);
  print_leaders(out, profile);
}

void cmd_transform(const Options& o, std::ostream& out) {
  const FunctionFile f = parse_function_file(read_file(o.input));
  const std::uint64_t budget = o.budget ? *o.budget : kDefaultFullBudget;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  if (f.reduced) {
    TableOptions opts;
    opts.max_theta = o.budget ? *o.budget : opts.max_theta;
    auto table = build_table(f.field, f.arity, opts);
    std::vector<BigInt> points(f.values.begin() + 1, f.values.end());
    const ReducedSpectrum spectrum = reduced_transform(ReducedSpectrum(table, f.values[0], std::move(points)));
    write_spectrum(text, spectrum);
    rows.push_back({{"point", format_point(Vector(f.arity, Field::zero()))}, {"value", json_integer(spectrum.at_zero())}});
    for (std::size_t i = 0; i < table->size(); ++i) {
      rows.push_back({{"point", format_point(table->point(i))}, {"value", json_integer(spectrum.at_points()[i])}});
    }
  } else {
    const FullSpectrum spectrum = transform_full(FullSpectrum::from_integers(f.field, f.arity, f.values),
                                                 TransformAlgorithm::butterfly, budget);
    write_spectrum(text, spectrum);
    for (std::uint64_t i = 0; i < spectrum.size(); ++i) {
      const auto integer = spectrum[i].to_integer();
      rows.push_back({{"point", format_point(decode_point(f.field, f.arity, i))},
                      {"value", integer ? json_integer(*integer) : ordered_json(spectrum[i].to_string())}});
    }
  }
  if (o.json) {
    ordered_json j;
    j["q"] = f.field.order();
    j["s"] = f.arity;
    j["analysis"] = "transform";
    j["method"] = f.reduced ? "reduced" : "full";
    j["result"] = std::move(rows);
    j["per_j"] = ordered_json::array();
    out << j.dump() << '\n';
    return;
  }
  out << text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral analysis of linear codes over finite fields", "gwht"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Code or function file")->required();
    sub->add_flag("--json", o.json, "Emit JSON");
    sub->add_option("--budget", o.budget, "Maximum theta and q^r (or q^k) sizes");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "auto, transform or oracle")
        ->check(CLI::IsMember({"auto", "transform", "oracle"}));
  };

  auto* wd = app.add_subcommand("weight-dist", "Weight distribution A_0..A_n");
  add_common(wd);
  add_method(wd);
  auto* cr = app.add_subcommand("covering-radius", "Covering radius");
  add_common(cr);
  add_method(cr);
  cr->add_option("--start-j", o.start_j, "Known lower bound on the covering radius")
      ->check(CLI::PositiveNumber);
  cr->add_option("--dump-spectra", o.dump_path, "Write every intermediate spectrum to PATH");
  auto* cl = app.add_subcommand("coset-leaders", "Coset-leader weight distribution");
  add_common(cl);
  add_method(cl);
  cl->add_option("--dump-spectra", o.dump_path, "Write every intermediate spectrum to PATH");
  auto* tr = app.add_subcommand("transform", "Transform a function given on GF(q)^s");
  add_common(tr);
  auto* orc = app.add_subcommand("oracle", "Brute-force weight distribution and coset leaders");
  add_common(orc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (wd->parsed()) cmd_weight_dist(o, out);
    else if (cr->parsed()) cmd_covering_radius(o, out, err);
    else if (cl->parsed()) cmd_coset_leaders(o, out, err);
    else if (tr->parsed()) cmd_transform(o, out);
    else if (orc->parsed()) cmd_oracle(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetError;
  } catch (const IterationCapError& e) {
    err << "iteration cap: " << e.what() << '\n';
    return kBudgetError;
  }
  return kOk;
}

}  // namespace gwht::cli

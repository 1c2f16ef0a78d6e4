#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bigramsey/devlin.hpp"
#include "bigramsey/errors.hpp"
#include "bigramsey/hyper.hpp"
#include "bigramsey/io.hpp"
#include "bigramsey/oracles.hpp"
#include "bigramsey/randstruct.hpp"
#include "bigramsey/sauer.hpp"

namespace bigramsey::cli {

namespace {

struct EnumerationFlags {
  std::string out;
  std::size_t cap = 1'000'000;
  unsigned jobs = 1;
  bool count_only = false;
  bool full = false;
  bool no_shapes = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--out", out, "Write the catalog as JSON");
    cmd->add_option("--cap", cap, "Maximum number of retained shapes")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    auto* count = cmd->add_flag("--count-only", count_only, "Count shapes without retaining them");
    cmd->add_flag("--full", full, "Retain every shape")->excludes(count);
    cmd->add_flag("--no-shapes", no_shapes, "Omit the shapes array from --out");
  }

  EnumerationOptions options(Mode fallback) const {
    EnumerationOptions o;
    o.mode = count_only ? Mode::count_only : full ? Mode::full : fallback;
    o.cap = cap;
    o.jobs = jobs;
    return o;
  }
};

void maybe_save(const Catalog& catalog, const std::string& path, bool with_shapes) {
  if (!path.empty()) save_catalog(catalog, path, with_shapes);
}

Graph require_graph(const std::string& path) {
  auto s = load_structure(path);
  if (!std::holds_alternative<Graph>(s)) throw MalformedInput(path + ": expected a 'graph' structure file");
  return std::get<Graph>(std::move(s));
}

Hypergraph3 require_hypergraph(const std::string& path) {
  auto s = load_structure(path);
  if (!std::holds_alternative<Hypergraph3>(s)) {
    throw MalformedInput(path + ": expected a 'hypergraph3' structure file");
  }
  return std::get<Hypergraph3>(std::move(s));
}

std::vector<TieReading> readings_of(const std::string& text) {
  if (text == "both") return {TieReading::literal, TieReading::strict};
  return {parse_tie_reading(text)};
}

// "F.json" -> "F.<tag>.json"
std::string tagged_path(const std::string& path, const std::string& tag) {
  std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + "." + tag + p.extension().string())).string();
}

void check_devlin_agreement(std::size_t n, const BigInt& count, std::ostream& err) {
  const auto tangent = tangent_number(n);
  const auto hook = hook_count_oracle(n);
  if (count != tangent || count != hook) {
    std::ostringstream msg;
    msg << "devlin n=" << n << ": enumerated " << count << ", tangent " << tangent << ", hook " << hook;
    throw InvariantViolation(msg.str());
  }
  err << "tangent and hook oracles agree\n";
}

void compare_catalogs(const Catalog& brute, const Catalog& enumerated, std::ostream& err) {
  if (brute.codes != enumerated.codes) {
    std::ostringstream msg;
    msg << "brute force found " << brute.count << " shapes, enumerator " << enumerated.count;
    throw InvariantViolation(msg.str());
  }
  err << "enumerator agrees with brute force\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shape enumeration for big Ramsey degrees", "bigramsey"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // devlin
  auto* devlin = app.add_subcommand("devlin", "Shapes of n-element subsets of the rationals");
  std::size_t devlin_n = 0;
  EnumerationFlags devlin_flags;
  devlin->add_option("--n", devlin_n, "Subset size")->required()->check(CLI::Range(1, 32));
  devlin_flags.attach(devlin);

  // sauer
  auto* sauer = app.add_subcommand("sauer", "Shapes of copies of a finite graph in the Rado graph");
  std::string graph_path;
  EnumerationFlags sauer_flags;
  sauer->add_option("--graph", graph_path, "Structure file")->required();
  sauer_flags.attach(sauer);

  // hyper
  auto* hyper = app.add_subcommand("hyper", "Shapes of copies of a finite 3-uniform hypergraph");
  std::string hyper_path;
  std::string hyper_reading = "literal";
  EnumerationFlags hyper_flags;
  hyper->add_option("--hypergraph", hyper_path, "Structure file")->required();
  hyper->add_option("--tie-reading", hyper_reading, "Projection rule for ties")
      ->check(CLI::IsMember({"literal", "strict", "both"}));
  hyper_flags.attach(hyper);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Independent reference computations");
  oracle->require_subcommand(1);
  std::size_t oracle_n = 0;
  auto* tangent = oracle->add_subcommand("tangent", "Tangent number of order 2n-1");
  tangent->add_option("--n", oracle_n)->required()->check(CLI::Range(1, 1000));
  auto* hook = oracle->add_subcommand("hook", "Sum of hook-length counts over full binary trees");
  hook->add_option("--n", oracle_n)->required()->check(CLI::Range(1, 16));
  auto* brute = oracle->add_subcommand("brute", "Exhaustive search over all orders");
  brute->require_subcommand(1);
  std::string brute_out;
  auto* brute_devlin = brute->add_subcommand("devlin");
  brute_devlin->add_option("--n", oracle_n)->required()->check(CLI::Range(1, 4));
  auto* brute_sauer = brute->add_subcommand("sauer");
  brute_sauer->add_option("--graph", graph_path)->required();
  auto* brute_hyper = brute->add_subcommand("hyper");
  brute_hyper->add_option("--hypergraph", hyper_path)->required();
  brute_hyper->add_option("--tie-reading", hyper_reading)->check(CLI::IsMember({"literal", "strict", "both"}));
  for (auto* b : {brute_devlin, brute_sauer, brute_hyper}) b->add_option("--out", brute_out, "Write the catalog");

  // realized
  auto* realized = app.add_subcommand("realized", "Shapes realized by subsets of a finite approximation");
  std::string family_text;
  std::size_t realized_n = 0;
  std::size_t realized_size = 0;
  SurveyOptions survey;
  std::string realized_reading = "literal";
  std::string realized_out;
  bool realized_check = false;
  realized->add_option("--family", family_text)->required()->check(CLI::IsMember({"devlin", "sauer", "hyper"}));
  realized->add_option("--n", realized_n)->required()->check(CLI::Range(1, 16));
  realized->add_option("--size", realized_size, "Vertices in the approximation")
      ->required()
      ->check(CLI::Range(1, 4096));
  realized->add_option("--seed", survey.seed, "Sampling seed");
  realized->add_option("--budget", survey.budget, "Subsets examined before sampling")->check(CLI::PositiveNumber);
  realized->add_option("--jobs", survey.jobs)->check(CLI::Range(1U, 1024U));
  realized->add_option("--tie-reading", realized_reading)->check(CLI::IsMember({"literal", "strict"}));
  realized->add_option("--out", realized_out, "Write the realized codes as a catalog");
  realized->add_flag("--check", realized_check, "Compare against the enumerated catalogs");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "One Graphviz file per shape in a catalog");
  std::string dot_catalog;
  std::string dot_dir;
  dot->add_option("--catalog", dot_catalog)->required();
  dot->add_option("--out", dot_dir, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (*devlin) {
      const auto fallback = devlin_n <= 6 ? Mode::full : Mode::count_only;
      const auto catalog = enumerate_devlin(devlin_n, devlin_flags.options(fallback));
      check_devlin_agreement(devlin_n, catalog.count, err);
      out << catalog.count << "\n";
      maybe_save(catalog, devlin_flags.out, !devlin_flags.no_shapes);
    } else if (*sauer) {
      const auto catalog = enumerate_sauer(require_graph(graph_path), sauer_flags.options(Mode::full));
      out << catalog.count << "\n";
      maybe_save(catalog, sauer_flags.out, !sauer_flags.no_shapes);
    } else if (*hyper) {
      const auto h = require_hypergraph(hyper_path);
      const auto readings = readings_of(hyper_reading);
      for (auto reading : readings) {
        auto options = hyper_flags.options(Mode::full);
        options.reading = reading;
        const auto catalog = enumerate_hyper(h, options);
        if (readings.size() > 1) out << to_string(reading) << " ";
        out << catalog.count << "\n";
        const auto path = readings.size() > 1 && !hyper_flags.out.empty()
                              ? tagged_path(hyper_flags.out, to_string(reading))
                              : hyper_flags.out;
        maybe_save(catalog, path, !hyper_flags.no_shapes);
      }
    } else if (*tangent) {
      out << tangent_number(oracle_n) << "\n";
    } else if (*hook) {
      out << hook_count_oracle(oracle_n) << "\n";
    } else if (*brute_devlin) {
      const auto b = brute_force_devlin(oracle_n);
      out << b.count << "\n";
      compare_catalogs(b, enumerate_devlin(oracle_n), err);
      maybe_save(b, brute_out, true);
    } else if (*brute_sauer) {
      const auto g = require_graph(graph_path);
      const auto b = brute_force_sauer(g);
      out << b.count << "\n";
      compare_catalogs(b, enumerate_sauer(g), err);
      maybe_save(b, brute_out, true);
    } else if (*brute_hyper) {
      const auto h = require_hypergraph(hyper_path);
      const auto readings = readings_of(hyper_reading);
      for (auto reading : readings) {
        const auto b = brute_force_hyper(h, reading);
        if (readings.size() > 1) out << to_string(reading) << " ";
        out << b.count << "\n";
        EnumerationOptions options;
        options.reading = reading;
        compare_catalogs(b, enumerate_hyper(h, options), err);
        maybe_save(b, readings.size() > 1 && !brute_out.empty() ? tagged_path(brute_out, to_string(reading)) : brute_out,
                   true);
      }
    } else if (*realized) {
      const auto family = parse_family(family_text);
      if (realized_n > realized_size) throw std::invalid_argument("--n exceeds --size");
      survey.reading = parse_tie_reading(realized_reading);
      const auto report = realized_shapes(family, realized_n, realized_size, survey);
      out << "family " << to_string(family) << "\n"
          << "n " << report.n << "\n"
          << "size " << report.structure_size << "\n"
          << "survey " << (report.truncated ? "sampled" : "exhaustive") << "\n"
          << "examined " << report.examined << "\n"
          << "not_antichain " << report.not_antichain << "\n"
          << "degenerate " << report.degenerate << "\n"
          << "not_binary " << report.not_binary << "\n"
          << "rejected " << report.rejected << "\n"
          << "shapes " << report.codes.size() << "\n";
      if (realized_check) {
        EnumerationOptions options;
        options.reading = survey.reading;
        const auto reference = catalog_union(family, realized_n, options);
        std::size_t outside = 0;
        for (const auto& c : report.codes) outside += !std::binary_search(reference.begin(), reference.end(), c);
        out << "catalog " << reference.size() << "\n"
            << "outside_catalog " << outside << "\n";
        if (outside > 0) throw InvariantViolation("realized shapes outside the enumerated catalog");
      }
      if (!realized_out.empty()) {
        Catalog c;
        c.family = family;
        c.n = realized_n;
        c.count = report.codes.size();
        c.retained = true;
        c.codes = report.codes;
        c.settings = {{"mode", "realized"},
                      {"size", std::to_string(realized_size)},
                      {"seed", std::to_string(survey.seed)},
                      {"budget", std::to_string(survey.budget)},
                      {"survey", report.truncated ? "sampled" : "exhaustive"}};
        if (family == Family::hyper) c.settings["tie_reading"] = realized_reading;
        save_catalog(c, realized_out);
      }
    } else if (*dot) {
      const auto catalog = load_catalog(dot_catalog);
      if (!catalog.retained) throw MalformedInput(dot_catalog + ": catalog has no shapes");
      std::filesystem::create_directories(dot_dir);
      const auto width = std::to_string(catalog.codes.size()).size();
      for (std::size_t i = 0; i < catalog.codes.size(); ++i) {
        std::ostringstream name;
        name << "shape_" << std::setw(static_cast<int>(width)) << std::setfill('0') << i;
        std::ofstream file(std::filesystem::path(dot_dir) / (name.str() + ".dot"));
        file << shape_to_dot(catalog.family, catalog.codes[i], name.str());
        if (!file) throw std::runtime_error("cannot write " + name.str() + ".dot");
      }
      out << catalog.codes.size() << "\n";
    }
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }
  return kOk;
}

}  // namespace bigramsey::cli

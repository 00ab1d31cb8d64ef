#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lamina/criterion.hpp"
#include "lamina/finest.hpp"
#include "lamina/lamfile.hpp"
#include "lamina/render.hpp"
#include "lamina/report.hpp"

namespace {

using namespace lamina;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

struct Flags {
  std::string input;
  std::optional<int> depth;
  int horizon = 64;
  int period_bound = 12;
  std::string out;
  bool tint = false;
  bool arcs = false;
};

Lamination load(const Flags& f, bool reject_linked = true) {
  Lamination lam = to_lamination(parse_lam(read_text(f.input), reject_linked));
  if (f.depth) lam = lam.restricted(*f.depth);
  return lam;
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + f.out);
  out << text;
}

int cmd_validate(const Flags& f) {
  Lamination lam = load(f, false);
  InvarianceReport report = validate(lam);
  emit(f, format_validation(lam, report));
  return report.passed() ? kOk : kViolations;
}

int cmd_expand(const Flags& f) {
  LamFile in = parse_lam(read_text(f.input));
  std::vector<AngleClass> gens;
  for (std::size_t i = 0; i < in.classes.size(); ++i) {
    if (in.levels[i] == 0) gens.push_back(in.classes[i]);
  }
  std::vector<ExplicitPreimage> pres;
  for (const ExplicitPreimage& p : in.preimages) {
    auto it = std::find(gens.begin(), gens.end(), in.classes[p.generator]);
    if (it == gens.end()) throw Error(ErrorKind::InvalidFamily, "preimage-of refers to a class above level 0");
    pres.push_back({static_cast<std::size_t>(it - gens.begin()), p.preimage});
  }
  Lamination lam = generate(in.degree, gens, f.depth.value_or(in.depth), pres, in.mode);
  for (const std::string& w : lam.warnings()) std::cerr << "warning: " << w << "\n";
  emit(f, serialize(from_lamination(lam)));
  return kOk;
}

int cmd_gaps(const Flags& f) {
  GapAnalysis analysis(load(f), ClassifyOptions{f.horizon});
  emit(f, format_faces(analysis));
  return kOk;
}

int cmd_classify(const Flags& f) {
  GapAnalysis analysis(load(f), ClassifyOptions{f.horizon});
  emit(f, format_classification(analysis));
  return kOk;
}

int cmd_finest(const Flags& f) {
  Lamination lam = load(f);
  FinestQuotient q = finest_quotient(lam, f.horizon);
  ValenceReport valence = endpoint_valence_check(lam);
  emit(f, serialize(from_lamination(q.to_lamination())));
  std::string cert = q.certificate_text() + format_valence(valence);
  if (!f.out.empty()) {
    std::ofstream out(f.out + ".cert", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + f.out + ".cert");
    out << cert;
  }
  return valence.passed() ? kOk : kViolations;
}

int cmd_criterion(const Flags& f) {
  Lamination lam = load(f);
  CriterionOptions opts;
  opts.horizon = f.horizon;
  emit(f, format_criterion(lam, evaluate_criterion(lam, f.period_bound, opts)));
  return kOk;
}

int cmd_slice_check(const Flags& f) {
  SlicingFamily fam(parse_family(read_text(f.input)).sets);
  SlicingResult result = is_well_slicing(fam);
  emit(f, format_slicing(fam, result));
  return result.well_slicing ? kOk : kViolations;
}

int cmd_render(const Flags& f) {
  RenderOptions opts;
  opts.tint = f.tint;
  opts.arcs = f.arcs;
  opts.horizon = f.horizon;
  emit(f, render(load(f), opts));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lamina: invariant laminations of the circle"};
  app.require_subcommand(1);
  Flags flags;
  int depth = -1;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Flags&);
  };
  const Command commands[] = {
      {"validate", "check the invariance axioms", cmd_validate},
      {"expand", "pull back level-0 classes to a depth", cmd_expand},
      {"gaps", "list faces and their images", cmd_gaps},
      {"classify", "classify every face", cmd_classify},
      {"finest", "finest quotient with certificate", cmd_finest},
      {"criterion", "evaluate the non-degeneracy criterion", cmd_criterion},
      {"slice-check", "check a family file for well-slicing", cmd_slice_check},
      {"render", "draw the lamination as SVG", cmd_render},
  };
  int (*chosen)(const Flags&) = nullptr;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", flags.input, "input file")->required();
    sub->add_option("--depth", depth, "depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--horizon", flags.horizon, "orbit horizon")->check(CLI::PositiveNumber);
    sub->add_option("--out", flags.out, "output path");
    if (std::string(c.name) == "criterion") {
      sub->add_option("--period-bound", flags.period_bound, "largest period in the census")->check(CLI::PositiveNumber);
    }
    if (std::string(c.name) == "render") {
      sub->add_flag("--tint", flags.tint, "fill faces by kind");
      sub->add_flag("--arcs", flags.arcs, "draw leaves as arcs");
    }
    sub->callback([&chosen, run = c.run] { chosen = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (depth >= 0) flags.depth = depth;

  try {
    return chosen(flags);
  } catch (const ParseError& e) {
    std::cerr << flags.input << ": " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}

// One line per acceptance criterion; exit status is non-zero if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "lamina/criterion.hpp"
#include "lamina/finest.hpp"
#include "lamina/lamfile.hpp"
#include "lamina/report.hpp"
#include "oracles.hpp"

using namespace lamina;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kAxiomSeconds = 5.0;
constexpr std::size_t kCorpusSize = 1000;
constexpr std::uint64_t kCorpusSeed = 20240611;
constexpr int kBasilicaDepths[] = {6, 7, 8};
constexpr int kRotationIterations[] = {100, 200, 400, 800, 1600};
constexpr long kWidthTimesIterations = 2;  // width * N must not exceed this
constexpr std::size_t kQuotientCases = 200;
constexpr std::size_t kQuotientMaxLeaves = 200;
constexpr int kSlicingLow = 8, kSlicingHigh = 40;
constexpr std::size_t kLemmaSamples = 10000;
constexpr double kSlicingSeconds = 10.0;
constexpr int kPeriodBound = 12;

const std::string kFixtures = LAMINA_FIXTURES;
const std::string kCli = LAMINA_CLI;

Angle A(long p, long q) { return Angle(p, q); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Lamination fixture(const std::string& name) { return to_lamination(parse_lam(read_text(kFixtures + "/" + name))); }

std::size_t face_between(const Arrangement& arr, const Leaf& a, const Leaf& b) {
  auto has = [](const GapFace& f, const Leaf& l) {
    for (const BoundaryItem& item : f.boundary) {
      if (item.is_leaf() && Leaf(item.from, item.to) == l) return true;
    }
    return false;
  };
  for (const GapFace& f : arr.faces()) {
    if (has(f, a) && has(f, b)) return f.id;
  }
  throw std::runtime_error("no face between " + a.str() + " and " + b.str());
}

struct Outcome {
  bool pass;
  std::string detail;
};

const std::vector<corpus::Sample>& shared_corpus() {
  static const std::vector<corpus::Sample> samples = corpus::generated(kCorpusSize, kCorpusSeed);
  return samples;
}

Outcome axiom_suite() {
  std::ostringstream out;
  bool ok = true;
  for (const AngleClass& g : {AngleClass{A(1, 7), A(2, 7), A(4, 7)}, AngleClass{A(1, 3), A(2, 3)}}) {
    auto t0 = std::chrono::steady_clock::now();
    Lamination lam = generate(2, {g}, 8);
    InvarianceReport r = validate(lam);
    double s = seconds_since(t0);
    std::size_t violations = r.unlinked_violations.size() + r.forward_violations.size() +
                             r.backward_violations.size() + r.covering_violations.size();
    ok = ok && violations == 0 && s < kAxiomSeconds;
    out << g.str() << " classes=" << lam.size() << " violations=" << violations << " time=" << s << "s; ";
  }
  return {ok, out.str()};
}

Outcome kiwi_bound() {
  std::size_t wandering = 0, bad = 0, class_checks = 0;
  std::string first;
  for (const auto& s : shared_corpus()) {
    const int d = s.lam.degree();
    const std::size_t bound = std::size_t{1} << d;
    GapAnalysis analysis(s.lam);
    for (const GapFace& f : analysis.arrangement().faces()) {
      GapClassification c;
      try {
        c = analysis.classify(f.id);
      } catch (const Error& e) {
        ++bad;
        if (first.empty()) first = e.what();
        continue;
      }
      if (c.kind != GapKind::WanderingPolygon) continue;
      ++wandering;
      bool injective = true;
      AngleClass cur(f.vertex_basis);
      for (int n = 0; n < analysis.options().horizon && injective; ++n) {
        AngleClass next = image_class(d, cur);
        injective = next.size() == cur.size();
        cur = next;
      }
      if (f.vertex_basis.size() > bound || (injective && f.vertex_basis.size() > static_cast<std::size_t>(d))) ++bad;
    }
    // Class-level form: forward images pairwise unlinked within the horizon.
    for (const AngleClass& cls : s.lam.classes()) {
      std::vector<AngleClass> orb{cls};
      bool wanders = true;
      for (int n = 1; n <= 64 && wanders; ++n) {
        AngleClass next = image_class(d, orb.back());
        for (const AngleClass& o : orb) wanders = wanders && unlinked(o, next);
        orb.push_back(next);
      }
      if (!wanders) continue;
      ++class_checks;
      if (cls.size() > bound) ++bad;
    }
  }
  std::ostringstream out;
  out << "laminations=" << shared_corpus().size() << " wandering_faces=" << wandering
      << " wandering_classes=" << class_checks << " violations=" << bad;
  if (!first.empty()) out << " first_error=" << first;
  return {bad == 0 && shared_corpus().size() >= kCorpusSize, out.str()};
}

Outcome endpoint_valence() {
  std::size_t worst = 0, violations = 0;
  for (const auto& s : shared_corpus()) {
    ValenceReport r = endpoint_valence_check(s.lam);
    worst = std::max(worst, r.max_valence);
    violations += r.hard_violations.size();
  }
  std::ostringstream out;
  out << "laminations=" << shared_corpus().size() << " max_valence=" << worst << " endpoints_with_5+=" << violations;
  return {violations == 0, out.str()};
}

Outcome basilica_classification() {
  std::ostringstream out;
  bool ok = true;
  for (int depth : kBasilicaDepths) {
    Lamination lam = generate(2, {AngleClass{A(1, 3), A(2, 3)}}, depth);
    GapAnalysis analysis(lam);
    std::size_t f = face_between(analysis.arrangement(), Leaf(A(1, 3), A(2, 3)), Leaf(A(1, 6), A(5, 6)));
    const auto& basis = analysis.arrangement().faces()[f].vertex_basis;
    int period = oracle::face_period(2, basis, 16);
    int degree = oracle::preimage_count(lam, basis, period);
    bool oracle_ok = period == 2 && degree == 2;
    GapClassification c = analysis.classify(f);
    bool match = c.kind == GapKind::FatouParattracting && c.period == std::optional<int>(2) &&
                 c.degree == std::optional<int>(2);
    ok = ok && oracle_ok && match;
    out << "depth " << depth << ": oracle period=" << period << " degree=" << degree << " got " << to_string(c.kind)
        << " period=" << c.period.value_or(0) << " degree=" << c.degree.value_or(0) << "; ";
  }
  return {ok, out.str()};
}

Outcome rotation_numbers() {
  std::ostringstream out;
  bool ok = true;
  Lamination rabbit = generate(2, {AngleClass{A(1, 7), A(2, 7), A(4, 7)}}, 6);
  GapAnalysis ra(rabbit);
  std::size_t tri = 0;
  for (const GapFace& f : ra.arrangement().faces()) {
    if (AngleClass(f.vertex_basis) == AngleClass{A(1, 7), A(2, 7), A(4, 7)}) tri = f.id;
  }
  RationalInterval r = ra.rotation_number(tri, 1, 1000);
  ok = r.is_point() && r.lower == Rational(1, 3);
  out << "rabbit triangle " << r.str() << "; ";
  for (const char* name : {"siegel_2_29.lam", "siegel_6_37.lam", "siegel_3_43.lam"}) {
    Lamination lam = fixture(name);
    GapAnalysis analysis(lam);
    std::optional<std::size_t> face;
    int period = 0;
    for (const GapFace& f : analysis.arrangement().faces()) {
      GapClassification c = analysis.classify(f.id);
      if (c.kind == GapKind::FatouSiegel && c.preperiod == std::optional<int>(0)) {
        face = f.id;
        period = *c.period;
        break;
      }
    }
    if (!face) {
      ok = false;
      out << name << " no degree-1 face; ";
      continue;
    }
    Rational prev = 1;
    bool linear = true;
    for (int n : kRotationIterations) {
      RationalInterval w = analysis.rotation_number(*face, period, n);
      linear = linear && w.width() * n <= kWidthTimesIterations && w.width() <= prev;
      prev = w.width();
    }
    ok = ok && linear;
    out << name << " width*N<=" << kWidthTimesIterations << (linear ? " holds" : " fails") << " (final width "
        << to_string(prev) << "); ";
  }
  return {ok, out.str()};
}

Outcome quotient_oracle() {
  std::mt19937_64 rng(kCorpusSeed + 6);
  std::vector<Lamination> cases;
  std::size_t next = 0;
  const auto& base = shared_corpus();
  while (cases.size() < kQuotientCases) {
    switch (cases.size() % 3) {
      case 0:
        cases.push_back(base[next++ % base.size()].lam);
        break;
      case 1:
        cases.push_back(corpus::split_polygons(base[next++ % base.size()].lam));
        break;
      default:
        cases.push_back(corpus::random_diagram(2 + static_cast<int>(cases.size() % 3),
                                               5 + (cases.size() * 37) % kQuotientMaxLeaves, rng));
    }
    std::size_t leaves = 0;
    for (const AngleClass& c : cases.back().classes()) leaves += hull_edges(c).size();
    if (leaves > kQuotientMaxLeaves) cases.pop_back();
  }
  std::size_t mismatches = 0, not_idempotent = 0, merges = 0;
  for (const Lamination& lam : cases) {
    FinestQuotient q = finest_quotient(lam);
    std::vector<AngleClass> got = q.classes;
    std::sort(got.begin(), got.end());
    if (got != oracle::shared_point_closure(lam)) ++mismatches;
    merges += lam.size() - q.classes.size();
    std::vector<AngleClass> again = finest_quotient(q.to_lamination()).classes;
    std::sort(again.begin(), again.end());
    if (again != got) ++not_idempotent;
  }
  std::ostringstream out;
  out << "cases=" << cases.size() << " merges=" << merges << " mismatches=" << mismatches
      << " not_idempotent=" << not_idempotent;
  return {mismatches == 0 && not_idempotent == 0, out.str()};
}

Outcome no_siegel() {
  std::size_t siegel = 0, faces = 0;
  for (const auto& s : shared_corpus()) {
    GapAnalysis analysis(finest_quotient(s.lam).to_lamination());
    for (const GapClassification& c : analysis.classify_all()) {
      ++faces;
      siegel += c.kind == GapKind::FatouSiegel;
    }
  }
  std::ostringstream out;
  out << "quotients=" << shared_corpus().size() << " faces=" << faces << " FatouSiegel=" << siegel;
  return {siegel == 0, out.str()};
}

Outcome well_slicing() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<int> failing;
  std::string example;
  for (int b = kSlicingLow; b <= kSlicingHigh; ++b) {
    SlicingFamily fam = vertical_collection(b);
    SlicingResult r = is_well_slicing(fam);
    if (!r.well_slicing) {
      failing.push_back(b);
      if (example.empty()) example = r.reason;
    }
  }
  LemmaReport lemmas = ray_separation_lemmas_check(vertical_collection(20), kLemmaSamples);
  double s = seconds_since(t0);
  std::ostringstream out;
  out << "bounds " << kSlicingLow << ".." << kSlicingHigh << " well-slicing="
      << (kSlicingHigh - kSlicingLow + 1 - static_cast<int>(failing.size())) << "/" << (kSlicingHigh - kSlicingLow + 1);
  if (!example.empty()) out << " (b=" << failing.front() << ": " << example << ")";
  out << "; lemmas " << kLemmaSamples << " samples "
      << (lemmas.passed() ? "pass" : "fail") << " (premises met "
      << lemmas.middle_separates.premises_met << "/" << lemmas.sep_sep.premises_met << "/"
      << lemmas.no_finite.premises_met << "); time=" << s << "s";
  return {failing.empty() && lemmas.passed() && s < kSlicingSeconds, out.str()};
}

Outcome criterion_end_to_end() {
  std::ostringstream out;
  bool ok = true;
  auto report = [&](const std::string& name) {
    Lamination lam = fixture(name + ".lam");
    CriterionReport r = evaluate_criterion(lam, kPeriodBound);
    std::string text = format_criterion(lam, r);
    bool golden = text == read_text(kFixtures + "/golden/" + name + ".criterion");
    ok = ok && golden;
    if (!golden) out << name << " golden mismatch; ";
    return r;
  };
  CriterionReport b = report("basilica");
  bool b_ok = b.overall == CriterionReport::Overall::NonDegenerate && b.parattracting &&
              b.witness == "parattracting Fatou gap";
  out << "basilica " << (b_ok ? "NonDegenerate via parattracting gap" : "unexpected") << "; ";
  CriterionReport rb = report("rabbit");
  bool r_ok = rb.census_verdict == CensusVerdict::Growing;
  out << "rabbit census " << to_string(rb.census_verdict) << " (expected Growing); ";
  CriterionReport e = report("empty");
  bool e_ok = e.overall == CriterionReport::Overall::NoEvidence;
  out << "empty " << (e_ok ? "NoEvidence" : "unexpected") << "; ";
  CriterionReport sg = report("siegel_2_29");
  bool s_ok = sg.siegel.has_value() && sg.siegel->label == "combinatorial only";
  out << "siegel fixture " << (s_ok ? "witness returned" : "no witness");
  return {ok && b_ok && r_ok && e_ok && s_ok, out.str()};
}

std::string run_cli(const std::string& args, const fs::path& out) {
  std::string cmd = "\"" + kCli + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  int rc = std::system(cmd.c_str());
  std::string text = read_text(out.string());
  return std::to_string(rc) + "\n" + text;
}

Outcome determinism() {
  std::size_t files = 0, round_trip_failures = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    std::string text = read_text(entry.path().string());
    if (entry.path().extension() == ".lam") {
      ++files;
      bool strict = entry.path().filename() != "crossing.lam";
      round_trip_failures += serialize(parse_lam(text, strict)) != text;
    } else if (entry.path().extension() == ".fam") {
      ++files;
      round_trip_failures += serialize(parse_family(text)) != text;
    }
  }
  fs::path work = fs::temp_directory_path() / "lamina_acceptance";
  fs::create_directories(work);
  const std::string F = kFixtures + "/";
  const std::vector<std::string> commands = {
      "validate " + F + "rabbit.lam",
      "validate " + F + "crossing.lam",
      "expand " + F + "basilica.lam --depth 6",
      "gaps " + F + "rabbit.lam --depth 4",
      "classify " + F + "basilica.lam",
      "classify " + F + "siegel_6_37.lam",
      "finest " + F + "basilica.lam --depth 5",
      "criterion " + F + "rabbit.lam --period-bound 8",
      "slice-check " + F + "vertical20.fam",
      "render " + F + "basilica.lam --depth 6 --tint --arcs",
  };
  std::size_t differing = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string a = run_cli(commands[i], work / ("a" + std::to_string(i)));
    std::string b = run_cli(commands[i], work / ("b" + std::to_string(i)));
    differing += a != b;
  }
  std::ostringstream out;
  out << "fixtures=" << files << " round_trip_failures=" << round_trip_failures << " cli_commands=" << commands.size()
      << " differing=" << differing;
  return {round_trip_failures == 0 && differing == 0 && files >= 7, out.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"axiom suite (rabbit, basilica depth 8)", axiom_suite},
      {"wandering polygon bound over corpus", kiwi_bound},
      {"endpoint valence at most four", endpoint_valence},
      {"basilica critical face classification", basilica_classification},
      {"rotation numbers", rotation_numbers},
      {"finest quotient oracle equivalence", quotient_oracle},
      {"no Siegel faces in quotients", no_siegel},
      {"well-slicing and separation lemmas", well_slicing},
      {"criterion end to end", criterion_end_to_end},
      {"determinism and round trip", determinism},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << n << " [" << (o.pass ? "PASS" : "FAIL") << "] " << name << ": " << o.detail << "\n";
  }
  std::cout << (n - failures) << "/" << n << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}

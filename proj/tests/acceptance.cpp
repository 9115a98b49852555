// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "spinal/circle_bundles.hpp"
#include "spinal/forms.hpp"
#include "spinal/io.hpp"
#include "spinal/lefschetz.hpp"
#include "spinal/obstructions.hpp"
#include "spinal/surgery.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace spinal;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int precision = 3) {
  std::ostringstream out;
  out.precision(precision);
  out << std::fixed << x;
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome symmetry_oracle() {
  testing::Rng rng(2024);
  std::vector<SpinalOpenBook> books;
  for (int i = 0; i < 200; ++i) books.push_back(testing::random_closed_book(rng));
  const auto start = Clock::now();
  int agree = 0;
  int symmetric = 0;
  for (const auto& b : books) {
    const bool fast = is_symmetric(b).symmetric;
    agree += fast == brute_force_symmetry_oracle(b);
    symmetric += fast;
  }
  const double t = seconds_since(start);
  return {agree == 200 && t < 2.0, std::to_string(agree) + "/200 agree (" + std::to_string(symmetric) +
                                       " symmetric), " + fmt(t) + " s"};
}

Outcome cover_oracle() {
  testing::Rng rng(77);
  const auto start = Clock::now();
  int agree = 0;
  int exists = 0;
  int rh_violations = 0;
  int bad_certificates = 0;
  for (int i = 0; i < 500; ++i) {
    const CoverSpec spec = testing::random_cover_spec(rng, 4);
    const CoverResult r = exists_cover(spec);
    const testing::CoverOracle o = testing::enumerate_covers(spec);
    bool same = r.exists == o.exists;
    if (same && r.exists) {
      same = r.branching == o.branching;
      exists += 1;
      if (!r.certificate || !testing::oracle_certificate_ok(spec, *r.certificate)) ++bad_certificates;
      if (r.cover_type) {
        int parts = 0;
        for (const auto& t : spec.boundary_types) parts += static_cast<int>(t.size());
        const bool rh = r.cover_type->euler() == spec.degree * spec.base.euler() - r.branching &&
                        r.cover_type->boundary() == parts;
        const bool unbranched_rh =
            r.branching != 0 || riemann_hurwitz_unbranched_ok(spec.base, spec.degree, *r.cover_type);
        if (!rh || !unbranched_rh) ++rh_violations;
      }
    }
    agree += same;
  }
  const double t = seconds_since(start);
  return {agree == 500 && rh_violations == 0 && bad_certificates == 0 && t < 30.0,
          std::to_string(agree) + "/500 agree (" + std::to_string(exists) + " exist), " +
              std::to_string(rh_violations) + " Riemann-Hurwitz violations, " + std::to_string(bad_certificates) +
              " bad certificates, " + fmt(t) + " s"};
}

Outcome golden_examples(const std::string& zoo, const std::string& cli) {
  struct Golden {
    std::string args;
    std::string expected;
  };
  const std::vector<Golden> goldens = {
      {"classify " + zoo + "/ob_s3.json", "ob_s3.classify.json"},
      {"classify " + zoo + "/cb3.json", "cb3.classify.json"},
      {"classify " + zoo + "/ot.json", "ot.classify.json"},
      {"classify " + zoo + "/cb3.json --flags " + zoo + "/exact_flags.json", "cb3_exact.classify.json"},
      {"circle-bundle verdicts " + zoo + "/cb3_multicurve.json", "cb3_multicurve.verdicts.json"},
      {"circle-bundle build " + zoo + "/mobius_multicurve.json", "mobius.book.json"},
  };
  int matched = 0;
  std::string mismatches;
  for (const auto& g : goldens) {
    int status = 0;
    const std::string got = run_capture("\"" + cli + "\" " + g.args, status);
    const std::string want = slurp(zoo + "/expected/" + g.expected);
    if (status == 0 && !want.empty() && got == want) {
      ++matched;
    } else {
      mismatches += " " + g.expected;
    }
  }

  // Semantic expectations, independently of the frozen bytes.
  const SpinalOpenBook ob = book_from_json(read_json_file(zoo + "/ob_s3.json"));
  const SpinalOpenBook cb3 = book_from_json(read_json_file(zoo + "/cb3.json"));
  const SpinalOpenBook ot = book_from_json(read_json_file(zoo + "/ot.json"));
  auto kinds = [](const std::vector<Verdict>& vs) {
    std::vector<VerdictKind> k;
    for (const auto& v : vs) k.push_back(v.kind);
    return k;
  };
  const bool ob_ok = is_symmetric(ob).symmetric && is_uniform(ob, 3).uniform &&
                     is_lefschetz_amenable(ob, 3).amenable &&
                     !find_planar_torsion(ob, ExactnessFlags::disk_rule(ob));
  const auto t1 = find_planar_torsion(cb3, ExactnessFlags::disk_rule(cb3));
  const auto k1 = kinds(verdict(cb3, ExactnessFlags::disk_rule(cb3)));
  const bool cb3_ok = t1 && t1->order == 1 && !k1.empty() && k1.front() == VerdictKind::NotStronglyFillable;
  const auto t0 = find_planar_torsion(ot, ExactnessFlags::disk_rule(ot));
  const auto k0 = kinds(verdict(ot, ExactnessFlags::disk_rule(ot)));
  const bool ot_ok = t0 && t0->order == 0 &&
                     std::find(k0.begin(), k0.end(), VerdictKind::Overtwisted) != k0.end();
  const bool pass = matched == static_cast<int>(goldens.size()) && ob_ok && cb3_ok && ot_ok;
  std::string detail = std::to_string(matched) + "/" + std::to_string(goldens.size()) + " golden files byte-equal";
  if (!mismatches.empty()) detail += " (mismatch:" + mismatches + ")";
  detail += std::string("; ob_s3 ") + (ob_ok ? "ok" : "WRONG") + ", cb3 " + (cb3_ok ? "ok" : "WRONG") + ", ot " +
            (ot_ok ? "ok" : "WRONG");
  return {pass, detail};
}

Outcome surgery_bookkeeping() {
  testing::Rng rng(99);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const SpinalOpenBook sob = testing::random_book(rng);
    std::set<VertebraId> a, b;
    for (const auto& v : sob.vertebrae) {
      const int pick = std::uniform_int_distribution<int>(0, 2)(rng);
      if (pick == 1) a.insert(v.id);
      if (pick == 2) b.insert(v.id);
    }
    const SpineRemoval ra = spine_remove(sob, a);
    std::map<PaperId, int> capped;
    for (const auto& c : ra.record.capped_orbits) capped[c.paper] += c.cap_count;
    bool ok = validate(ra.book).ok();
    for (const auto& p : sob.papers) {
      const PaperComponent* q = ra.book.find_paper(p.id);
      ok = ok && q != nullptr && q->page.euler() == p.page.euler() + capped[p.id];
    }
    std::set<VertebraId> both = a;
    both.insert(b.begin(), b.end());
    const SpinalOpenBook joint = spine_remove(sob, both).book;
    ok = ok && validate(joint).ok() && spine_remove(ra.book, b).book == joint &&
         spine_remove(spine_remove(sob, b).book, a).book == joint;

    const auto bs = testing::random_binding_sum_case(rng);
    const SpinalOpenBook summed = binding_sum(bs.book, bs.c1, bs.c2);
    ok = ok && validate(summed).ok() && spine_euler(summed) == spine_euler(bs.book) - 2;

    const auto fs = testing::random_fiber_sum_case(rng);
    const int pb = fs.book.find_paper(fs.j0)->page.boundary();
    const SpinalOpenBook fibered = fiber_sum_pages(fs.book, fs.j0, fs.j1, fs.ident);
    ok = ok && validate(fibered).ok() && spine_euler(fibered) == spine_euler(fs.book) - pb &&
         fibered.papers.size() + 1 == fs.book.papers.size();
    failures += !ok;
  }
  return {failures == 0, std::to_string(100 - failures) + "/100 books satisfy removal, commutativity, "
                                                           "binding-sum and fiber-sum identities"};
}

Outcome lefschetz_uniformity() {
  testing::Rng rng(31);
  int ok = 0;
  for (int i = 0; i < 50; ++i) {
    const LefschetzDescriptor lf = testing::random_descriptor(rng);
    const SpinalOpenBook sob = boundary_sob(lf);
    if (!validate(sob).ok()) continue;
    const UniformResult u = is_uniform(sob, 3);
    bool unbranched = u.uniform;
    for (const auto& a : u.assignments) unbranched = unbranched && a.result.exists && a.result.branching == 0;
    ok += unbranched;
  }
  return {ok == 50, std::to_string(ok) + "/50 boundary books valid and uniform with unbranched certificates"};
}

Outcome numerics_closed_form() {
  using namespace forms;
  const auto start = Clock::now();
  const CheckReport contact = contact_check(models::contact_chart(32), models::contact_example(1.0));
  const double contact_err = std::abs(contact.min_value - std::exp(-1.0));
  const CheckReport collar = collar_model_check(1.0, 1, models::collar4_chart(16), models::standard_smoothing());
  double field_err = 1.0;
  for (const auto& c : collar.clauses)
    if (c.name.rfind("(b)", 0) == 0) field_err = c.value;
  const double t = seconds_since(start);
  const bool pass = contact.pass && contact_err < 1e-9 && collar.pass && field_err < 1e-9 && t < 5.0;
  std::ostringstream d;
  d.precision(3);
  d << "contact min e^-1 error " << contact_err << ", Liouville field error " << field_err << ", collar "
    << (collar.pass ? "pass" : "fail") << ", " << fmt(t) << " s";
  return {pass, d.str()};
}

Outcome numerics_threshold() {
  using namespace forms;
  // Frozen closed-form value: min over s in [-1, 0] of A + K e^s > 0 with A = -2.
  constexpr double kExpected = 5.43656365691809;
  const OneForm sigma = OneForm::basis(3, 1, ScalarField::exp_of(3, 0));
  const OneForm linear = OneForm::basis(3, 2, ScalarField::constant(3, 1.0)) +
                         OneForm::basis(3, 1, ScalarField::linear(3, 0, -2.0));
  const OneForm contact = OneForm::basis(3, 2, ScalarField::constant(3, 1.0)) + sigma;
  const ThresholdResult a = thurston_threshold(contact_family(models::collar3_chart(16), linear, sigma), 20.0);
  const ThresholdResult b = thurston_threshold(contact_family(models::collar3_chart(16), contact, sigma), 20.0);
  const bool pass = a.bounded && std::abs(a.k0 - kExpected) <= 1e-3 && b.bounded && b.k0 == 0.0;
  std::ostringstream d;
  d.precision(7);
  d << "K0(A=-2) = " << a.k0 << " vs 2e = " << kExpected << ", K0(contact) = " << b.k0;
  return {pass, d.str()};
}

Outcome circle_bundle_cross_check() {
  testing::Rng rng(55);
  int agree = 0;
  std::string error;
  for (int i = 0; i < 100; ++i) {
    const MulticurveData mc = testing::random_multicurve(rng);
    try {
      const CircleBundleReport r = circle_bundle_verdicts(mc);
      agree += r.torsion == direct_torsion_criterion(mc);
    } catch (const InternalInconsistency& e) {
      error = e.what();
    }
  }
  MulticurveData mobius;
  mobius.base_orientable = false;
  mobius.regions = {{Surface::disk(), {0}}};
  mobius.curves = {OneSidedCurve{0}};
  const SpinalOpenBook sob = build_sob(mobius);
  const bool quote = validate(sob).ok() && sob.papers.size() == 1 && sob.papers[0].orbits.size() == 1 &&
                     sob.papers[0].orbits[0].size() == 2;
  std::string detail = std::to_string(agree) + "/100 agree, one-sided curve gives " +
                       (quote ? "connected boundary with multiplicity 2" : "WRONG multiplicity");
  if (!error.empty()) detail += "; " + error;
  return {agree == 100 && quote && error.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::string zoo = SPINAL_ZOO_DIR;
  std::string cli;
  app.add_option("--zoo", zoo, "zoo directory");
  app.add_option("--cli", cli, "path to the spinal executable")->required();
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symmetry oracle", symmetry_oracle},
      {"cover oracle", cover_oracle},
      {"golden examples", [&] { return golden_examples(zoo, cli); }},
      {"surgery bookkeeping", surgery_bookkeeping},
      {"boundary uniformity", lefschetz_uniformity},
      {"numerics closed form", numerics_closed_form},
      {"numerics threshold", numerics_threshold},
      {"circle-bundle cross-check", circle_bundle_cross_check},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

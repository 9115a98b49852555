#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <sstream>

#include "spinal/io.hpp"
#include "spinal/surgery.hpp"

using namespace spinal;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2 };

struct Options {
  std::string output = "json";
  bool text() const { return output == "text"; }
};

void emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.text()) {
    std::cout << text;
  } else {
    std::cout << dump(j);
  }
}

std::string bool_word(bool b) { return b ? "yes" : "no"; }

std::string verdict_lines(const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  if (verdicts.empty()) out << "  (none)\n";
  for (const auto& v : verdicts) {
    out << "  " << to_string(v.kind);
    if (v.witness) out << " [order " << v.witness->order << ", piece " << v.witness->piece.value << "]";
    out << "\n    " << v.citation << "\n";
  }
  return out.str();
}

int cmd_validate(const Options& opt, const std::string& file) {
  const SpinalOpenBook sob = book_from_json(read_json_file(file));
  const ValidationReport report = validate(sob);
  std::ostringstream text;
  text << (report.ok() ? "valid\n" : "invalid\n");
  for (const auto& v : report.violations) text << "  [" << v.code << "] " << v.message << "\n";
  emit(opt, to_json(report), text.str());
  return report.ok() ? kOk : kViolation;
}

int cmd_classify(const Options& opt, const std::string& file, int max_genus,
                 const std::string& flags_file) {
  const SpinalOpenBook sob = book_from_json(read_json_file(file));
  require_valid(sob);
  const ExactnessFlags flags = flags_file.empty()
                                   ? ExactnessFlags::disk_rule(sob)
                                   : flags_from_json(read_json_file(flags_file), sob);
  Json out;
  std::ostringstream text;
  const SymmetryResult sym = is_symmetric(sob);
  out["symmetric"] = sym.symmetric;
  text << "symmetric: " << bool_word(sym.symmetric);
  if (sym.witness) text << " (" << sym.witness->describe() << ")";
  text << "\n";

  try {
    const UniformResult uni = is_uniform(sob, max_genus);
    out["uniform"] = uni.uniform;
    text << "uniform: " << bool_word(uni.uniform);
    if (uni.base) text << " (base " << uni.base->to_string() << ")";
    text << "\n";
  } catch (const SearchBoundExceeded&) {
    out["uniform"] = "bound-exceeded";
    text << "uniform: bound-exceeded\n";
  }
  try {
    const AmenabilityResult am = is_lefschetz_amenable(sob, max_genus);
    out["amenable"] = am.amenable;
    text << "amenable: " << bool_word(am.amenable);
    if (am.branched_base) {
      text << " (base " << am.branched_base->to_string() << " forces " << am.branching
           << " branch points over vertebra " << am.branched_vertebra->value << ")";
    }
    text << "\n";
  } catch (const SearchBoundExceeded&) {
    out["amenable"] = "bound-exceeded";
    text << "amenable: bound-exceeded\n";
  }

  const auto torsion = find_planar_torsion(sob, flags);
  out["torsion"] = torsion ? to_json(*torsion) : Json(nullptr);
  text << "torsion: ";
  if (torsion) {
    text << "order " << torsion->order << ", piece " << torsion->piece.value << ", "
         << to_string(torsion->separating) << "\n";
  } else {
    text << "none\n";
  }
  const auto verdicts = verdict(sob, flags);
  out["verdicts"] = to_json(verdicts);
  text << "verdicts:\n" << verdict_lines(verdicts);
  emit(opt, out, text.str());
  return kOk;
}

int emit_book(const Options& opt, const SpinalOpenBook& sob, Json extra = Json::object()) {
  const SpinalOpenBook canonical = canonicalize(sob);
  if (extra.empty()) {
    emit(opt, to_json(canonical), to_json(canonical).dump(2) + "\n");
  } else {
    extra["book"] = to_json(canonical);
    emit(opt, extra, extra.dump(2) + "\n");
  }
  return kOk;
}

std::set<VertebraId> vertebra_set(const std::vector<int>& ids) {
  std::set<VertebraId> out;
  for (int i : ids) out.insert(VertebraId{i});
  return out;
}

int cmd_spine_remove(const Options& opt, const std::string& file, const std::vector<int>& ids) {
  const SpineRemoval r = spine_remove(book_from_json(read_json_file(file)), vertebra_set(ids));
  for (const auto& note : r.notes) std::cerr << "warning: " << note << "\n";
  Json record;
  record["removed_vertebrae"] = Json::array();
  for (auto v : r.record.removed_vertebrae) record["removed_vertebrae"].push_back(v.value);
  record["capped_orbits"] = Json::array();
  for (const auto& c : r.record.capped_orbits) {
    record["capped_orbits"].push_back({{"paper", c.paper.value}, {"labels", c.labels}, {"cap_count", c.cap_count}});
  }
  record["euler_delta_pages"] = r.record.euler_delta_pages;
  return emit_book(opt, r.book, Json{{"handle_record", record}, {"notes", r.notes}});
}

int cmd_lefschetz_boundary(const Options& opt, const std::string& file) {
  const LefschetzDescriptor lf = descriptor_from_json(read_json_file(file));
  const SpinalOpenBook sob = boundary_sob(lf);
  return emit_book(opt, sob, Json{{"allowable", is_allowable(lf)}, {"euler_total", euler_total(lf)}});
}

int cmd_circle_bundle_build(const Options& opt, const std::string& file) {
  return emit_book(opt, build_sob(multicurve_from_json(read_json_file(file))));
}

int cmd_circle_bundle_verdicts(const Options& opt, const std::string& file) {
  const MulticurveData mc = multicurve_from_json(read_json_file(file));
  const CircleBundleReport report = circle_bundle_verdicts(mc);
  Json out{{"inverts_orientations", true},
           {"torsion", report.torsion},
           {"verdicts", to_json(report.verdicts)},
           {"notes", report.notes}};
  std::ostringstream text;
  text << "planar 1-torsion: " << bool_word(report.torsion) << "\nverdicts:\n"
       << verdict_lines(report.verdicts);
  for (const auto& n : report.notes) text << "note: " << n << "\n";
  emit(opt, out, text.str());
  return kOk;
}

struct FormsArgs {
  std::string model;
  double K = 1.0;
  int m = 1;
  double A = -2.0;
  int grid = 16;
  double k_max = 20.0;
  std::string f_csv;
  std::string g_csv;
  double delta = 0.5;
};

int report_check(const Options& opt, const forms::CheckReport& r) {
  std::ostringstream text;
  text << r.summary() << "\n";
  for (const auto& c : r.clauses) {
    text << "  " << (c.pass ? "pass " : "FAIL ") << c.name << ": " << c.value;
    if (!c.detail.empty()) text << " (" << c.detail << ")";
    text << "\n";
  }
  emit(opt, to_json(r), text.str());
  return r.pass ? kOk : kViolation;
}

int cmd_verify_forms(const Options& opt, const FormsArgs& a) {
  using namespace forms;
  if (a.model == "contact") return report_check(opt, contact_check(models::contact_chart(a.grid), models::contact_example(a.K)));
  if (a.model == "horizontal") return report_check(opt, contact_check(models::collar3_chart(a.grid), models::horizontal_example(a.K)));
  if (a.model == "handle") {
    const TwoForm omega = TwoForm::basis(4, 0, 1, ScalarField::constant(4, a.K)) +
                          TwoForm::basis(4, 2, 3, ScalarField::exp_of(4, 2));
    return report_check(opt, symplectic_check(models::collar4_chart(a.grid), omega));
  }
  if (a.model == "collar") {
    return report_check(opt, collar_model_check(a.K, a.m, models::collar4_chart(a.grid), models::standard_smoothing()));
  }
  if (a.model == "threshold" || a.model == "threshold-contact") {
    const OneForm sigma = OneForm::basis(3, 1, ScalarField::exp_of(3, 0));
    OneForm lambda = OneForm::basis(3, 2, ScalarField::constant(3, 1.0));
    lambda = lambda + (a.model == "threshold" ? OneForm::basis(3, 1, ScalarField::linear(3, 0, a.A))
                                              : OneForm::basis(3, 1, ScalarField::exp_of(3, 0)));
    const ThresholdResult t = thurston_threshold(contact_family(models::collar3_chart(a.grid), lambda, sigma), a.k_max);
    Json out{{"bounded", t.bounded}, {"K0", t.bounded ? Json(t.k0) : Json("unbounded")}, {"evaluations", t.evaluations}};
    std::ostringstream text;
    text << "K0 = " << (t.bounded ? std::to_string(t.k0) : std::string("unbounded")) << " (grid " << a.grid << "^3, "
         << t.evaluations << " checks)\n";
    emit(opt, out, text.str());
    return t.bounded ? kOk : kViolation;
  }
  if (a.model == "giroux-interface") {
    if (a.f_csv.empty() != a.g_csv.empty()) throw ParseError("--f-csv and --g-csv go together");
    if (a.f_csv.empty()) {
      return report_check(opt, giroux_interface_check(models::giroux_f(3, 0), models::giroux_g(3, 0),
                                                      models::interface_chart(a.grid, 0.0, 0.9)));
    }
    const Profile f = load_profile_csv(a.f_csv);
    const Profile g = load_profile_csv(a.g_csv);
    const double lo = std::max(f.lo(), g.lo());
    const double hi = std::min(f.hi(), g.hi());
    return report_check(opt, giroux_interface_check(ScalarField::tabulated(3, 0, f), ScalarField::tabulated(3, 0, g),
                                                    models::interface_chart(a.grid, lo, hi)));
  }
  if (a.model == "boundary-profile") {
    if (a.f_csv.empty() != a.g_csv.empty()) throw ParseError("--f-csv and --g-csv go together");
    if (a.f_csv.empty()) {
      auto [f, g] = models::standard_boundary_profile(a.delta);
      return report_check(opt, boundary_profile_check(f, g, a.delta, a.delta / 4));
    }
    return report_check(opt, boundary_profile_check(load_profile_csv(a.f_csv), load_profile_csv(a.g_csv), a.delta,
                                                     a.delta / 4));
  }
  throw ParseError("unknown model \"" + a.model + "\"");
}

std::vector<Partition> parse_types(const std::string& spec) {
  std::vector<Partition> out;
  std::stringstream outer(spec);
  std::string part;
  while (std::getline(outer, part, ';')) {
    Partition p;
    std::stringstream inner(part);
    std::string n;
    while (std::getline(inner, n, ',')) {
      try {
        p.push_back(std::stoi(n));
      } catch (const std::exception&) {
        throw ParseError("bad cycle type \"" + spec + "\"");
      }
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spinal open books: validation, classification, surgery and form checks"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--output", opt.output, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "check a spinal open book");
  validate_cmd->add_option("file", file, "book JSON")->required();

  int max_genus = 3;
  std::string flags_file;
  auto* classify_cmd = app.add_subcommand("classify", "symmetry, uniformity, torsion and verdicts");
  classify_cmd->add_option("file", file, "book JSON")->required();
  classify_cmd->add_option("--max-base-genus", max_genus, "largest base genus searched")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--flags", flags_file, "exactness flags JSON (default: disk rule)");

  auto* surgery_cmd = app.add_subcommand("surgery", "surgery operations");
  surgery_cmd->require_subcommand(1);
  std::vector<int> ids;
  auto* remove_cmd = surgery_cmd->add_subcommand("spine-remove", "remove vertebrae and cap pages");
  remove_cmd->add_option("file", file)->required();
  remove_cmd->add_option("--ids", ids, "vertebra ids");
  auto* blow_cmd = surgery_cmd->add_subcommand("blow-up", "blow up disk vertebrae");
  blow_cmd->add_option("file", file)->required();
  blow_cmd->add_option("--ids", ids, "vertebra ids");
  int c1 = 0;
  int c2 = 0;
  auto* bsum_cmd = surgery_cmd->add_subcommand("binding-sum", "binding sum of two disk vertebrae");
  bsum_cmd->add_option("file", file)->required();
  bsum_cmd->add_option("--c1", c1)->required();
  bsum_cmd->add_option("--c2", c2)->required();
  int j0 = 0;
  int j1 = 0;
  std::vector<int> ident;
  std::string order = "first-then-second";
  auto* fsum_cmd = surgery_cmd->add_subcommand("fiber-sum", "connected sum along pages");
  fsum_cmd->add_option("file", file)->required();
  fsum_cmd->add_option("--j0", j0)->required();
  fsum_cmd->add_option("--j1", j1)->required();
  fsum_cmd->add_option("--ident", ident, "label of j1 glued to labels 1..b of j0")->required();
  fsum_cmd->add_option("--order", order)->check(CLI::IsMember({"first-then-second", "second-then-first"}));

  auto* lf_cmd = app.add_subcommand("lefschetz", "bordered Lefschetz fibrations");
  lf_cmd->require_subcommand(1);
  auto* lf_boundary = lf_cmd->add_subcommand("boundary", "boundary spinal open book");
  lf_boundary->add_option("file", file)->required();

  auto* cb_cmd = app.add_subcommand("circle-bundle", "circle bundles partitioned by multicurves");
  cb_cmd->require_subcommand(1);
  auto* cb_build = cb_cmd->add_subcommand("build", "spinal open book of the bundle");
  cb_build->add_option("file", file)->required();
  auto* cb_verdicts = cb_cmd->add_subcommand("verdicts", "fillability verdicts");
  cb_verdicts->add_option("file", file)->required();

  FormsArgs forms_args;
  auto* forms_cmd = app.add_subcommand("verify-forms", "numeric checks of the model forms");
  forms_cmd->add_option("--model", forms_args.model,
                        "contact, horizontal, handle, collar, threshold, threshold-contact, "
                        "giroux-interface, boundary-profile")
      ->required();
  forms_cmd->add_option("--K", forms_args.K);
  forms_cmd->add_option("--m", forms_args.m);
  forms_cmd->add_option("--A", forms_args.A);
  forms_cmd->add_option("--grid", forms_args.grid)->check(CLI::Range(2, 512));
  forms_cmd->add_option("--K-max", forms_args.k_max);
  forms_cmd->add_option("--f-csv", forms_args.f_csv);
  forms_cmd->add_option("--g-csv", forms_args.g_csv);
  forms_cmd->add_option("--delta", forms_args.delta);

  int base_genus = 0;
  int base_boundary = 1;
  int degree = 1;
  std::string types;
  bool branched = false;
  bool disconnected = false;
  auto* cover_cmd = app.add_subcommand("cover", "decide existence of a cover of a surface");
  cover_cmd->add_option("--base-genus", base_genus);
  cover_cmd->add_option("--base-boundary", base_boundary);
  cover_cmd->add_option("--degree", degree)->required();
  cover_cmd->add_option("--types", types, "cycle types, e.g. \"2;1,1\"")->required();
  cover_cmd->add_flag("--branched", branched);
  cover_cmd->add_flag("--disconnected", disconnected);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt, file);
    if (*classify_cmd) return cmd_classify(opt, file, max_genus, flags_file);
    if (*remove_cmd) return cmd_spine_remove(opt, file, ids);
    if (*blow_cmd) return emit_book(opt, blow_up(book_from_json(read_json_file(file)), vertebra_set(ids)));
    if (*bsum_cmd) {
      return emit_book(opt, binding_sum(book_from_json(read_json_file(file)), SpineCircleId{c1}, SpineCircleId{c2}));
    }
    if (*fsum_cmd) {
      return emit_book(opt, fiber_sum_pages(book_from_json(read_json_file(file)), PaperId{j0}, PaperId{j1}, ident,
                                            order == "first-then-second" ? FiberSumOrder::FirstThenSecond
                                                                         : FiberSumOrder::SecondThenFirst));
    }
    if (*lf_boundary) return cmd_lefschetz_boundary(opt, file);
    if (*cb_build) return cmd_circle_bundle_build(opt, file);
    if (*cb_verdicts) return cmd_circle_bundle_verdicts(opt, file);
    if (*forms_cmd) return cmd_verify_forms(opt, forms_args);
    if (*cover_cmd) {
      CoverSpec spec;
      try {
        spec.base = Surface::orientable(base_genus, base_boundary);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what());
      }
      spec.degree = degree;
      spec.boundary_types = parse_types(types);
      spec.unbranched = !branched;
      spec.require_connected = !disconnected;
      const CoverResult r = exists_cover(spec);
      std::ostringstream text;
      text << (r.exists ? "exists" : "does not exist");
      if (r.cover_type) text << ", total " << r.cover_type->to_string();
      if (r.exists) text << ", branching " << r.branching;
      text << "\n";
      emit(opt, to_json(r), text.str());
      return r.exists ? kOk : kViolation;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidBook& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << dump(to_json(e.report()));
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

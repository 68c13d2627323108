#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bax/baxterizer.hpp"
#include "bax/catalog.hpp"
#include "bax/json_io.hpp"
#include "bax/verifier.hpp"

namespace bax::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyOpts {
  std::string family;
  std::optional<int> level, M, n, m;
  std::string params;
  std::string export_path;
};

void add_family_options(CLI::App* app, FamilyOpts& f) {
  app->add_option("--family", f.family, "su2 | minimal | ty | so | sp | g2")->required();
  app->add_option("--level,-k", f.level, "level k");
  app->add_option("--M", f.M, "Z_M for Tambara-Yamagami");
  app->add_option("--n", f.n, "so(n)");
  app->add_option("--m", f.m, "sp(2m)");
  app->add_option("--params", f.params, "alternative form, e.g. k=4 or n=5,k=2");
  app->add_option("--export-category", f.export_path, "write the category JSON to this path");
}

FamilySpec to_spec(const FamilyOpts& f) {
  FamilySpec spec;
  try {
    spec.family = parse_family(f.family);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  std::optional<int> k = f.level, M = f.M, n = f.n, m = f.m;
  std::stringstream ss(f.params);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("bad --params entry '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad --params value in '" + item + "'");
    }
    if (key == "k" || key == "level")
      k = value;
    else if (key == "M")
      M = value;
    else if (key == "n")
      n = value;
    else if (key == "m")
      m = value;
    else
      throw UsageError("unknown --params key '" + key + "'");
  }
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
  };
  switch (spec.family) {
    case Family::TAMBARA_YAMAGAMI: spec.M = need(M, "--M"); break;
    case Family::SO_N:
      spec.n = need(n, "--n");
      spec.k = need(k, "--level");
      break;
    case Family::SP_2M:
      spec.m = need(m, "--m");
      spec.k = need(k, "--level");
      break;
    default: spec.k = need(k, "--level"); break;
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return spec;
}

CategoryData load(const FamilyOpts& f) {
  CategoryData cat = build(to_spec(f));
  if (!f.export_path.empty()) {
    std::ofstream os(f.export_path);
    if (!os) throw UsageError("cannot write " + f.export_path);
    os << category_to_json(cat) << "\n";
  }
  return cat;
}

Label default_rho(const CategoryData& cat) {
  if (cat.declared) return cat.declared->rho;
  if (cat.family == "ty") return cat.label("X");
  return cat.label("1/2");
}

Label default_phi(const CategoryData& cat) {
  if (cat.declared) return cat.declared->graphs.begin()->first;
  return cat.label("1");
}

Label parse_label(const CategoryData& cat, const std::string& text, Label fallback) {
  if (text.empty()) return fallback;
  try {
    return cat.label(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

cplx parse_complex(const std::string& s) {
  auto whole = [&](const std::string& t, double& v) {
    try {
      std::size_t used = 0;
      v = std::stod(t, &used);
      return used == t.size();
    } catch (const std::exception&) {
      return false;
    }
  };
  double re = 0, im = 0;
  if (whole(s, re)) return {re, 0.0};
  if (!s.empty() && s.back() == 'i') {
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i)
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') split = i;
    if (split == std::string::npos) {
      if (body.empty() || body == "+") return {0.0, 1.0};
      if (body == "-") return {0.0, -1.0};
      if (whole(body, im)) return {0.0, im};
    } else {
      std::string a = body.substr(0, split), b = body.substr(split);
      if (b == "+") b = "1";
      if (b == "-") b = "-1";
      if (whole(a, re) && whole(b, im)) return {re, im};
    }
  }
  throw UsageError("cannot parse complex number '" + s + "' (use 2, 0.5-1.5i, ...)");
}

std::string fmt(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string poly_text(const Polynomial& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? ", " : "") + fmt(p.coeffs()[i]);
  return s + "]";
}

int cmd_catalog(const std::string& format, std::ostream& out) {
  auto fams = list_families();
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : fams)
      arr.push_back({{"family", f.key},
                     {"description", f.description},
                     {"parameters", f.parameters},
                     {"baxterisable", f.baxterisable},
                     {"representable", f.representable}});
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& f : fams) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-8s %-34s baxterisable=%s representable=%s  %s\n", f.key.c_str(),
                  f.parameters.c_str(), f.baxterisable ? "yes" : "no", f.representable ? "yes" : "no",
                  f.description.c_str());
    out << buf;
  }
  return 0;
}

int cmd_baxterize(const FamilyOpts& fo, const std::string& rho_s, const std::string& phi_s,
                  const std::vector<std::string>& mu_s, const std::string& ref_s, bool cleared,
                  const std::string& format, std::ostream& out) {
  CategoryData cat = load(fo);
  Label rho = parse_label(cat, rho_s, default_rho(cat));
  Label phi = parse_label(cat, phi_s, default_phi(cat));
  SolveOptions opts;
  if (!ref_s.empty()) opts.reference = parse_label(cat, ref_s, 0);
  AmplitudeSolution sol;
  try {
    sol = solve_central(cat, rho, phi, opts);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  std::vector<cplx> mus;
  for (const auto& s : mu_s) mus.push_back(parse_complex(s));

  if (format == "json") {
    out << solution_to_json(cat, sol, mus, cleared) << "\n";
  } else {
    out << cat.name() << "  rho=" << cat.display(rho) << " phi=" << cat.display(phi) << "  verdict "
        << to_string(sol.verdict) << "  reference " << cat.display(sol.reference) << "\n";
    for (std::size_t i = 0; i < sol.channels.size(); ++i)
      out << "  A_" << cat.display(sol.channels[i]) << "(mu) = " << poly_text(sol.amplitude[i].num()) << " / "
          << poly_text(sol.amplitude[i].den()) << "\n";
    for (const auto& c : sol.consistency.cycles) {
      out << "  cycle";
      for (Label x : c.cycle) out << " " << cat.display(x);
      char buf[64];
      std::snprintf(buf, sizeof buf, "  residual %.17g", c.residual);
      out << buf << (c.consistent ? "  consistent" : "  INCONSISTENT") << "\n";
    }
    for (cplx mu : mus) {
      out << "  mu = " << fmt(mu) << "\n";
      for (std::size_t i = 0; i < sol.channels.size(); ++i)
        out << "    A_" << cat.display(sol.channels[i]) << " = " << fmt(sol.amplitude[i](mu)) << "\n";
    }
  }
  return sol.verdict == Verdict::INCONSISTENT ? 1 : 0;
}

int cmd_classify(const FamilyOpts& fo, const std::string& format, std::ostream& out) {
  CategoryData cat = load(fo);
  auto rows = classify_pairs(cat);
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"rho", cat.display(r.rho)},
                     {"phi", cat.display(r.phi)},
                     {"verdict", to_string(r.verdict)},
                     {"vertices", r.vertices},
                     {"edges", r.edges},
                     {"independent_cycles", r.independent_cycles},
                     {"worst_cycle_residual", r.worst_cycle_residual}});
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& r : rows) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "(%s, %s): %-16s vertices=%d edges=%d cycles=%d residual=%.17g\n",
                  cat.display(r.rho).c_str(), cat.display(r.phi).c_str(), to_string(r.verdict).c_str(), r.vertices,
                  r.edges, r.independent_cycles, r.worst_cycle_residual);
    out << buf;
  }
  return 0;
}

struct VerifyArgs {
  std::string kind;
  std::string rho, phi;
  int L = -1;
  int samples = -1;
  std::uint64_t seed = 20240611;
  std::optional<double> tol;
  int Lx = 2, Ly = 2;
};

int cmd_verify(const FamilyOpts& fo, const VerifyArgs& va, const std::string& format, std::ostream& out) {
  CategoryData cat = load(fo);
  VerificationReport rep;
  auto tol_or = [&](double d) { return va.tol.value_or(d); };
  auto samples_or = [&](int d) { return va.samples > 0 ? va.samples : d; };

  if (va.kind == "loop") {
    cplx q = family_q(to_spec(fo));
    rep = loop_functional_check(q, samples_or(50), va.seed, tol_or(1e-10));
    cplx mu = sample_mus(va.seed, 1, {q * q})[0];
    auto w = loop_weights(q, mu);
    cplx z1 = loop_partition_enumeration(w, va.Lx, va.Ly);
    cplx z2 = loop_partition_transfer(w, va.Lx, va.Ly);
    rep.add("loop.torus_routes", std::abs(z1 - z2) / std::max(std::abs(z1), 1e-300), tol_or(1e-10), 1,
            "Z = " + fmt(z1) + " on " + std::to_string(va.Lx) + "x" + std::to_string(va.Ly));
  } else {
    if (!cat.representable()) throw UsageError(cat.name() + " is twist-only; '" + va.kind + "' needs F-symbols");
    Label rho = parse_label(cat, va.rho, default_rho(cat));
    Label phi = parse_label(cat, va.phi, default_phi(cat));
    AmplitudeSolution sol;
    if (va.kind != "projectors") {
      try {
        sol = solve_central(cat, rho, phi);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      if (sol.verdict == Verdict::INCONSISTENT) {
        out << "no consistent amplitudes for rho=" << cat.display(rho) << " phi=" << cat.display(phi) << "\n";
        return 1;
      }
    }
    if (va.kind == "ybe") {
      rep = verify_ybe(cat, rho, sol, va.L > 0 ? va.L : 3, {samples_or(25), va.seed, tol_or(1e-8)});
    } else if (va.kind == "current") {
      rep = verify_current_vertex(cat, rho, phi, sol, {samples_or(10), va.seed, tol_or(1e-10)});
    } else if (va.kind == "transfer") {
      rep = verify_commuting_transfer(cat, rho, sol, va.L > 0 ? va.L : 4, {samples_or(10), va.seed, tol_or(1e-8)});
    } else if (va.kind == "braid") {
      std::optional<CategoryData> other;
      if (cat.family == "minimal") other = build_su2k(to_spec(fo).k);
      rep = verify_braid_limits(cat, rho, sol, va.L > 0 ? va.L : 3, other ? &*other : nullptr, tol_or(1e-6));
      auto rel = verify_braid_relations(cat, rho, va.L > 0 ? std::max(va.L, 3) : 4, 1e-9);
      rep.checks.insert(rep.checks.end(), rel.checks.begin(), rel.checks.end());
    } else if (va.kind == "projectors") {
      rep = verify_projector_algebra(cat, rho, va.L > 0 ? va.L : 4, tol_or(1e-10));
    }
    rep.seed = va.seed;
  }
  out << (format == "json" ? rep.to_json() + "\n" : rep.to_table());
  return rep.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Baxterisation engine: conserved-current Boltzmann weights from braided category data",
               "baxterise"};
  app.require_subcommand(1);
  std::string format = "table";
  auto fmt_opt = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}));
  };

  auto* catalog = app.add_subcommand("catalog", "list the built-in families");
  std::string catalog_action;
  catalog->add_option("action", catalog_action, "list")->required()->check(CLI::IsMember({"list"}));
  fmt_opt(catalog);

  FamilyOpts fb, fc, fv;
  std::string rho, phi, reference;
  std::vector<std::string> mus;
  bool cleared = false;
  auto* bax_cmd = app.add_subcommand("baxterize", "solve the conserved-current constraint");
  add_family_options(bax_cmd, fb);
  bax_cmd->add_option("--rho", rho, "strand object, e.g. 1/2 or X");
  bax_cmd->add_option("--phi", phi, "current object");
  bax_cmd->add_option("--mu", mus, "evaluate amplitudes at these mu (2, 0.5-1i, ...)");
  bax_cmd->add_option("--reference", reference, "normalize this channel to 1");
  bax_cmd->add_flag("--cleared", cleared, "also emit amplitudes times the common denominator");
  fmt_opt(bax_cmd);

  auto* cls = app.add_subcommand("classify", "verdict for every admissible (rho, phi)");
  add_family_options(cls, fc);
  fmt_opt(cls);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "numerical verification suites");
  ver->add_option("kind", va.kind, "ybe | current | braid | projectors | transfer | loop")
      ->required()
      ->check(CLI::IsMember({"ybe", "current", "braid", "projectors", "transfer", "loop"}));
  add_family_options(ver, fv);
  ver->add_option("--rho", va.rho, "strand object");
  ver->add_option("--phi", va.phi, "current object");
  ver->add_option("--L", va.L, "strands / chain length");
  ver->add_option("--samples", va.samples, "number of sampled spectral parameters");
  ver->add_option("--seed", va.seed, "seed for the sample sequence");
  ver->add_option("--tol", va.tol, "override the tolerance");
  ver->add_option("--Lx", va.Lx, "loop torus width");
  ver->add_option("--Ly", va.Ly, "loop torus height");
  fmt_opt(ver);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(format, out);
    if (bax_cmd->parsed()) return cmd_baxterize(fb, rho, phi, mus, reference, cleared, format, out);
    if (cls->parsed()) return cmd_classify(fc, format, out);
    if (ver->parsed()) return cmd_verify(fv, va, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bax::cli

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ldv/cli.hpp"
#include "ldv/diagonal.hpp"
#include "ldv/errors.hpp"

namespace ldv {

namespace {

constexpr std::int64_t kDefaultDiagonalOrder = 10;
constexpr std::int64_t kDefaultRadiusOrder = 39;

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string support_text(const Face& face, const std::string& sep) {
  std::vector<std::string> parts;
  for (const auto& p : face.support_points) parts.push_back(to_string(p));
  return join(parts, sep);
}

std::string polys_text(const std::vector<LaurentPolynomial>& ps, std::span<const std::string> names,
                       const std::string& sep) {
  std::vector<std::string> parts;
  for (const auto& p : ps) parts.push_back(to_string(p, names));
  return join(parts, sep);
}

std::string status_of(const Eliminant& e) {
  if (e.empty) return "empty";
  return e.generators.empty() ? "all" : "nonempty";
}

std::string eliminant_text(const Eliminant& e, std::span<const std::string> names) {
  if (e.empty) return "empty";
  if (e.generators.empty()) return "whole torus";
  return polys_text(e.generators, names, ", ");
}

// Machine records: tab-separated key=value fields, one record per line.
class Records {
 public:
  void add(std::initializer_list<std::pair<std::string, std::string>> fields) {
    bool first = true;
    for (const auto& [k, v] : fields) {
      if (!first) out_ << '\t';
      first = false;
      out_ << k << '=' << v;
    }
    out_ << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

LandauOptions landau_options(const ProblemFile& file, const RunFlags& flags) {
  LandauOptions o;
  o.skip_nondegeneracy = flags.skip_nondeg || file.skip_nondeg;
  if (flags.spair_cap) {
    o.elimination.spair_cap = *flags.spair_cap;
  } else if (file.spair_cap) {
    o.elimination.spair_cap = *file.spair_cap;
  }
  return o;
}

std::size_t face_index(const NewtonPolytope& poly, const Face& face) {
  for (std::size_t i = 0; i < poly.faces().size(); ++i)
    if (poly.faces()[i] == face) return i;
  return poly.faces().size();
}

void nondeg_text(const ProblemFile& file, const NondegeneracyVerdict& v, bool machine, std::ostream& out,
                 Records& rec) {
  const auto& p = file.problem;
  auto poly = newton_polytope(p.f);
  if (machine) {
    rec.add({{"record", "nondeg"},
             {"faces", std::to_string(poly.faces().size())},
             {"verdict", v.nondegenerate ? "nondegenerate" : "degenerate"}});
    if (!v.nondegenerate)
      rec.add({{"record", "witness"},
               {"face_id", std::to_string(face_index(poly, *v.witness))},
               {"dim", std::to_string(v.witness->dim)},
               {"support", support_text(*v.witness, ";")},
               {"truncation", to_string(*v.truncation, p.vars)},
               {"critical", polys_text(v.critical_locus, p.vars, ";")}});
    return;
  }
  out << "faces checked: " << poly.faces().size() << "\n";
  out << "verdict: " << (v.nondegenerate ? "nondegenerate" : "degenerate") << "\n";
  if (v.nondegenerate) return;
  out << "witness face " << face_index(poly, *v.witness) << ": dim " << v.witness->dim << ", support "
      << support_text(*v.witness, " ") << "\n";
  out << "truncation: " << to_string(*v.truncation, p.vars) << "\n";
  out << "critical torus points: " << polys_text(v.critical_locus, p.vars, ", ") << " = 0\n";
}

RunResult cmd_nondeg(const ProblemFile& file, const RunFlags& flags) {
  const auto& p = file.problem;
  auto opts = landau_options(file, flags);
  auto verdict = check_nondegenerate(p.f, opts.elimination);
  std::ostringstream out;
  Records rec;
  bool machine = flags.format == OutputFormat::kMachine;
  if (!machine) out << "f = " << to_string(p.f, p.vars) << "\n";
  nondeg_text(file, verdict, machine, out, rec);
  return {machine ? rec.str() : out.str(), "", verdict.nondegenerate ? kExitOk : kExitMath};
}

RunResult cmd_transform(const ProblemFile& file, const RunFlags& flags) {
  const auto& p = file.problem;
  auto tp = transform(p);
  std::vector<std::string> subs;
  for (std::size_t i = 0; i < p.n(); ++i)
    subs.push_back(to_string(monomial_substitute(LaurentPolynomial::variable(p.n(), i), tp.a), tp.names));
  if (flags.format == OutputFormat::kMachine) {
    Records rec;
    rec.add({{"record", "transform"},
             {"Q", to_string(p.q)},
             {"B", to_string(tp.b)},
             {"A", to_string(tp.a)},
             {"f_tilde", to_string(tp.f_tilde, tp.names)}});
    for (std::size_t i = 0; i < p.n(); ++i)
      rec.add({{"record", "substitution"}, {"variable", p.vars[i]}, {"image", subs[i]}});
    return {rec.str(), "", kExitOk};
  }
  std::ostringstream out;
  out << "Q = " << to_string(p.q) << "\n";
  out << "B = " << to_string(tp.b) << "\n";
  out << "A = " << to_string(tp.a) << "\n";
  for (std::size_t i = 0; i < p.n(); ++i) out << p.vars[i] << " = " << subs[i] << "\n";
  out << "f~ = " << to_string(tp.f_tilde, tp.names) << "\n";
  return {out.str(), "", kExitOk};
}

RunResult cmd_faces(const ProblemFile& file, const RunFlags& flags) {
  const auto& p = file.problem;
  auto poly = newton_polytope(p.f);
  auto tp = transform(p);
  auto sigma = u_faces(tp);
  auto upoly = newton_polytope([&] {
    std::vector<ExponentVector> pts;
    for (const auto& sf : sigma)
      if (sf.face.improper) pts = sf.face.support_points;
    return pts;
  }());
  bool machine = flags.format == OutputFormat::kMachine;
  std::ostringstream out;
  Records rec;
  if (!machine)
    out << "Newton polytope of f: dim " << poly.dim() << ", " << poly.vertices().size() << " vertices, "
        << poly.faces().size() << " faces\n";
  for (std::size_t i = 0; i < poly.faces().size(); ++i) {
    const auto& face = poly.faces()[i];
    auto trunc = to_string(truncate_to_face(p.f, face), p.vars);
    if (machine) {
      rec.add({{"record", "delta"},
               {"face_id", std::to_string(i)},
               {"dim", std::to_string(face.dim)},
               {"support", support_text(face, ";")},
               {"truncation", trunc}});
    } else {
      out << "delta " << i << "  dim " << face.dim << "  support " << support_text(face, " ") << "  truncation "
          << trunc << "\n";
    }
  }
  if (!machine)
    out << "Newton polytope of f~ in u: dim " << upoly.dim() << ", " << upoly.vertices().size() << " vertices, "
        << sigma.size() << " faces\n";
  for (const auto& sf : sigma) {
    auto trunc = to_string(sf.truncation, tp.names);
    if (machine) {
      rec.add({{"record", "sigma"},
               {"face_id", std::to_string(sf.face_id)},
               {"dim", std::to_string(sf.face.dim)},
               {"support", support_text(sf.face, ";")},
               {"truncation", trunc},
               {"t_dependent", sf.depends_on_t ? "yes" : "no"}});
    } else {
      out << "sigma " << sf.face_id << "  dim " << sf.face.dim << "  support " << support_text(sf.face, " ")
          << "  truncation " << trunc << (sf.depends_on_t ? "  t-dependent" : "") << "\n";
    }
  }
  return {machine ? rec.str() : out.str(), "", kExitOk};
}

RunResult cmd_landau(const ProblemFile& file, const RunFlags& flags) {
  const auto& p = file.problem;
  auto opts = landau_options(file, flags);
  auto report = landau_variety(p, opts);
  const auto& tp = report.transformed;
  auto tn = tp.t_names();
  bool machine = flags.format == OutputFormat::kMachine;
  std::ostringstream out;
  Records rec;
  if (machine) {
    rec.add({{"record", "problem"},
             {"f_tilde", to_string(tp.f_tilde, tp.names)},
             {"nondegeneracy", report.nondegeneracy
                                   ? (report.nondegeneracy->nondegenerate ? "nondegenerate" : "degenerate")
                                   : "skipped"}});
  } else {
    out << "f~ = " << to_string(tp.f_tilde, tp.names) << "\n";
    out << "nondegeneracy: "
        << (report.nondegeneracy ? (report.nondegeneracy->nondegenerate ? "nondegenerate" : "degenerate")
                                 : "skipped")
        << "\n";
  }
  if (report.degenerate()) {
    nondeg_text(file, *report.nondegeneracy, machine, out, rec);
    if (!machine) out << "landau variety not computed: f is degenerate\n";
    return {machine ? rec.str() : out.str(), "", kExitMath};
  }
  for (const auto& entry : report.entries) {
    const auto& sf = entry.sigma;
    if (machine) {
      rec.add({{"record", "face"},
               {"face_id", std::to_string(sf.face_id)},
               {"dim", std::to_string(sf.face.dim)},
               {"support", support_text(sf.face, ";")},
               {"truncation", to_string(sf.truncation, tp.names)},
               {"status", status_of(entry.eliminant)},
               {"generators", polys_text(entry.eliminant.generators, tn, ";")}});
    } else {
      out << "sigma " << sf.face_id << "  dim " << sf.face.dim << "  support " << support_text(sf.face, " ")
          << "\n  truncation: " << to_string(sf.truncation, tp.names)
          << "\n  L: " << eliminant_text(entry.eliminant, tn) << "\n";
    }
  }
  auto u = union_ideal(report, opts.elimination);
  if (machine) {
    rec.add({{"record", "union"}, {"status", status_of(u)}, {"generators", polys_text(u.generators, tn, ";")}});
  } else {
    out << "nonempty components: " << report.components.size() << "\n";
    out << "union: " << eliminant_text(u, tn) << "\n";
  }
  return {machine ? rec.str() : out.str(), "", kExitOk};
}

VertexExpansion make_expansion(const DiagonalProblem& p) { return VertexExpansion(p.f, p.g, expansion_order(p)); }

std::int64_t order_flag(const RunFlags& flags, std::int64_t fallback) {
  auto k = flags.max_order.value_or(fallback);
  if (k < 0) throw InputError("--max must be nonnegative");
  return k;
}

RunResult cmd_diagonal(const ProblemFile& file, const RunFlags& flags) {
  const auto& p = file.problem;
  auto exp = make_expansion(p);
  const auto k_max = order_flag(flags, kDefaultDiagonalOrder);
  bool machine = flags.format == OutputFormat::kMachine;
  std::ostringstream out;
  Records rec;
  auto join_values = [](const std::vector<Rational>& vs) {
    std::vector<std::string> parts;
    for (const auto& v : vs) parts.push_back(to_string(v));
    return join(parts, ", ");
  };
  if (flags.ray) {
    if (flags.ray->size() != p.r()) throw InputError("--ray must have one entry per row of Q");
    auto values = diagonal_along_ray(exp, p.q, *flags.ray, static_cast<std::size_t>(k_max + 1));
    if (machine) {
      for (std::size_t m = 0; m < values.size(); ++m)
        rec.add({{"record", "coefficient"}, {"m", std::to_string(m)}, {"value", to_string(values[m])}});
      return {rec.str(), "", kExitOk};
    }
    out << "order " << to_string(exp.vertex()) << ", ray " << to_string(*flags.ray) << ", m = 0.." << k_max << "\n";
    out << join_values(values) << "\n";
    return {out.str(), "", kExitOk};
  }
  auto table = diagonal_coefficients(exp, p.q, k_max);
  if (machine) {
    for (const auto& [k, v] : table)
      rec.add({{"record", "coefficient"}, {"k", to_string(k)}, {"value", to_string(v)}});
    return {rec.str(), "", kExitOk};
  }
  out << "order " << to_string(exp.vertex()) << ", |k_i| <= " << k_max << "\n";
  if (p.r() == 1) {
    std::vector<Rational> pos, neg;
    for (std::int64_t k = 0; k <= k_max; ++k) pos.push_back(table.at({k}));
    for (std::int64_t k = -1; k >= -k_max; --k) neg.push_back(table.at({k}));
    out << join_values(pos) << "\n";
    if (std::any_of(neg.begin(), neg.end(), [](const Rational& c) { return c != 0; }))
      out << "k < 0: " << join_values(neg) << "\n";
    return {out.str(), "", kExitOk};
  }
  std::size_t zeros = 0;
  for (const auto& [k, v] : table) {
    if (v == 0) {
      ++zeros;
      continue;
    }
    out << "c" << to_string(k) << " = " << to_string(v) << "\n";
  }
  out << "zero entries: " << zeros << "\n";
  return {out.str(), "", kExitOk};
}

RunResult cmd_radius(const ProblemFile& file, const RunFlags& flags) {
  const auto& p = file.problem;
  ExponentVector ray = flags.ray.value_or(ExponentVector{});
  if (!flags.ray) {
    if (p.r() != 1) throw InputError("radius needs a single diagonal row or --ray");
    ray = {1};
  }
  if (ray.size() != p.r()) throw InputError("--ray must have one entry per row of Q");
  auto exp = make_expansion(p);
  const auto k_max = order_flag(flags, kDefaultRadiusOrder);
  auto values = diagonal_along_ray(exp, p.q, ray, static_cast<std::size_t>(k_max + 1));
  auto est = radius_estimate(values);
  auto nonzero = std::count_if(values.begin(), values.end(), [](const Rational& c) { return c != 0; });

  // Landau comparison only where the ray series is the diagonal itself.
  std::optional<double> nearest;
  bool degenerate = false;
  if (p.r() == 1 && ray == ExponentVector{1}) {
    auto report = landau_variety(p, landau_options(file, flags));
    degenerate = report.degenerate();
    for (const auto& comp : report.components)
      for (const auto& g : comp)
        for (double root : positive_real_roots(g))
          if (!nearest || root < *nearest) nearest = root;
  }
  bool machine = flags.format == OutputFormat::kMachine;
  if (machine) {
    Records rec;
    rec.add({{"record", "radius"},
             {"coefficients", std::to_string(values.size())},
             {"nonzero", std::to_string(nonzero)},
             {"fit_points", std::to_string(est.points)},
             {"estimate", fixed(est.radius)},
             {"lower", fixed(est.lower)},
             {"upper", fixed(est.upper)},
             {"residual", fixed(est.residual)},
             {"nearest", nearest ? fixed(*nearest) : "none"},
             {"relative_difference", nearest ? fixed(std::abs(est.radius - *nearest) / *nearest) : "none"}});
    return {rec.str(), "", degenerate ? kExitMath : kExitOk};
  }
  std::ostringstream out;
  out << "coefficients: m = 0.." << k_max << " along ray " << to_string(ray) << " (" << nonzero << " nonzero, fit on "
      << est.points << ")\n";
  out << "radius estimate: " << fixed(est.radius) << "\n";
  out << "band: [" << fixed(est.lower) << ", " << fixed(est.upper) << "]\n";
  out << "fit residual: " << fixed(est.residual) << "\n";
  if (degenerate) {
    out << "landau comparison: f is degenerate\n";
  } else if (nearest) {
    out << "nearest positive landau point: " << fixed(*nearest) << "\n";
    out << "relative difference: " << fixed(100 * std::abs(est.radius - *nearest) / *nearest, 2) << "%\n";
  } else if (p.r() == 1 && ray == ExponentVector{1}) {
    out << "nearest positive landau point: none\n";
  } else {
    out << "landau comparison: only along the diagonal of a single row Q\n";
  }
  return {out.str(), "", degenerate ? kExitMath : kExitOk};
}

RunResult cmd_crosscheck(const ProblemFile& file, const RunFlags& flags) {
  const auto& p = file.problem;
  auto opts = landau_options(file, flags);
  auto tn = transform(p).t_names();
  auto entries = crosscheck(p, opts);
  bool machine = flags.format == OutputFormat::kMachine;
  std::ostringstream out;
  Records rec;
  std::size_t paired = 0, disagree = 0;
  for (const auto& e : entries) {
    if (e.sigma_id) ++paired;
    if (!e.agree) ++disagree;
    if (machine) {
      rec.add({{"record", "delta"},
               {"face_id", std::to_string(e.delta_id)},
               {"dim", std::to_string(e.delta.dim)},
               {"support", support_text(e.delta, ";")},
               {"sigma_id", e.sigma_id ? std::to_string(*e.sigma_id) : "none"},
               {"direct_status", status_of(e.direct)},
               {"direct", polys_text(e.direct.generators, tn, ";")},
               {"component_status", e.component ? status_of(*e.component) : "none"},
               {"component", e.component ? polys_text(e.component->generators, tn, ";") : ""},
               {"agree", e.agree ? "yes" : "no"}});
      continue;
    }
    out << "delta " << e.delta_id << "  dim " << e.delta.dim << "  support " << support_text(e.delta, " ") << "\n";
    out << "  direct: " << eliminant_text(e.direct, tn) << "\n";
    if (e.sigma_id) {
      out << "  sigma " << *e.sigma_id << ": " << eliminant_text(*e.component, tn) << "  "
          << (e.agree ? "agree" : "DISAGREE") << "\n";
    } else {
      out << "  no counterpart in the u-polytope\n";
    }
  }
  if (machine) {
    rec.add({{"record", "summary"},
             {"faces", std::to_string(entries.size())},
             {"paired", std::to_string(paired)},
             {"disagreements", std::to_string(disagree)}});
  } else {
    out << "summary: " << entries.size() << " faces, " << paired << " paired, " << disagree << " disagreements\n";
  }
  return {machine ? rec.str() : out.str(), "", disagree ? kExitMath : kExitOk};
}

template <typename F>
RunResult guarded(F&& body) {
  try {
    return body();
  } catch (const ResourceCapExceeded& e) {
    return {"", std::string("resource cap: ") + e.what() + "\n", kExitResourceCap};
  } catch (const InputError& e) {
    return {"", std::string("input error: ") + e.what() + "\n", kExitInput};
  } catch (const MathError& e) {
    return {"", std::string("math error: ") + e.what() + "\n", kExitMath};
  } catch (const std::exception& e) {
    return {"", std::string("internal error: ") + e.what() + "\n", kExitInternal};
  }
}

}  // namespace

bool is_command(std::string_view command) {
  for (const char* c : {"nondeg", "transform", "faces", "landau", "diagonal", "radius", "crosscheck"})
    if (command == c) return true;
  return false;
}

RunResult run(std::string_view command, const ProblemFile& file, const RunFlags& flags) {
  return guarded([&]() -> RunResult {
    if (command == "nondeg") return cmd_nondeg(file, flags);
    if (command == "transform") return cmd_transform(file, flags);
    if (command == "faces") return cmd_faces(file, flags);
    if (command == "landau") return cmd_landau(file, flags);
    if (command == "diagonal") return cmd_diagonal(file, flags);
    if (command == "radius") return cmd_radius(file, flags);
    if (command == "crosscheck") return cmd_crosscheck(file, flags);
    throw InputError("unknown command '" + std::string(command) + "'");
  });
}

RunResult run_source(std::string_view command, std::string_view problem_text, const RunFlags& flags) {
  if (!is_command(command)) return {"", "input error: unknown command '" + std::string(command) + "'\n", kExitInput};
  ProblemFile file;
  auto loaded = guarded([&]() -> RunResult {
    file = parse_problem(problem_text);
    return {};
  });
  if (loaded.exit_code != kExitOk) return loaded;
  return run(command, file, flags);
}

RunResult run_path(std::string_view command, const std::string& path, const RunFlags& flags) {
  if (!is_command(command)) return {"", "input error: unknown command '" + std::string(command) + "'\n", kExitInput};
  ProblemFile file;
  auto loaded = guarded([&]() -> RunResult {
    file = load_problem(path);
    return {};
  });
  if (loaded.exit_code != kExitOk) return loaded;
  return run(command, file, flags);
}

}  // namespace ldv

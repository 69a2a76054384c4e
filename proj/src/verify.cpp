#include "tate/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "tate/asai.hpp"
#include "tate/formulas.hpp"

namespace tate {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Info:
      return "INFO";
  }
  return "?";
}

void RunReport::add(std::string subject, std::string check, Status status, std::string detail) {
  rows_.push_back(CheckRow{std::move(subject), std::move(check), status, std::move(detail)});
}

std::size_t RunReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [s](const CheckRow& r) { return r.status == s; }));
}

std::string RunReport::render(Format format) const {
  auto rows = rows_;
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  if (format == Format::Tsv) {
    out << "# " << command_ << '\n';
    for (const auto& r : rows) out << r.subject << '\t' << r.check << '\t' << status_name(r.status) << '\t' << r.detail << '\n';
  } else {
    out << "command: " << command_ << '\n';
    for (const auto& r : rows) {
      out << '[' << status_name(r.status) << "] " << r.subject << ' ' << r.check;
      if (!r.detail.empty()) out << ": " << r.detail;
      out << '\n';
    }
  }
  out << count(Status::Pass) << " pass / " << count(Status::Fail) << " fail / " << count(Status::Info) << " info\n";
  return out.str();
}

namespace {

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

Character product_of_conjugates(const GaloisModel& model) {
  Character chi = model.rho_character();
  for (std::size_t i = 1; i < model.index(); ++i) chi = chi * conjugate(model.rho_character(), model.subgroup(), model.representative(i));
  return chi;
}

bool twist_bijection(const MatrixRep& rho) {
  const auto base = one_dim_constituents(rho);
  for (const auto& lambda : linear_characters(rho.group())) {
    const auto twisted = one_dim_constituents(twist(rho, lambda));
    if (twisted.size() != base.size()) return false;
    for (const auto& c : base) {
      const auto target = c.character * lambda;
      const bool found = std::any_of(twisted.begin(), twisted.end(), [&](const LinearConstituent& t) {
        return t.multiplicity == c.multiplicity && t.character == target;
      });
      if (!found) return false;
    }
  }
  return true;
}

template <class Fn>
void guarded(RunReport& report, const std::string& subject, const std::string& check, Fn fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report.add(subject, check, Status::Fail, e.what());
  }
}

}  // namespace

void verify_model(const ModelFixture& fx, const std::string& subject, RunReport& report) {
  const auto& g = *fx.group;
  const auto& h = fx.h;
  const auto& rho = fx.rho;

  report.add(subject, "group-law", pass_if(g.validate() && h.group()->validate()), "|G|=" + std::to_string(g.order()) + " |H|=" + std::to_string(h.order()));

  guarded(report, subject, "cosets", [&] {
    const auto cosets = left_cosets(h);
    std::size_t covered = 0;
    for (const auto& c : cosets) covered += c.members.size();
    const bool ok = g.order() % h.order() == 0 && cosets.size() == g.order() / h.order() && covered == g.order();
    report.add(subject, "cosets", pass_if(ok), std::to_string(cosets.size()) + " cosets");
  });

  guarded(report, subject, "class-refinement", [&] {
    // each H-class lies inside one G-class
    const auto& hg = *h.group();
    bool ok = true;
    for (const auto& cls : hg.conjugacy_classes()) {
      const auto c0 = g.class_of(h.to_parent(cls.front()));
      for (Elem x : cls) ok = ok && g.class_of(h.to_parent(x)) == c0;
    }
    report.add(subject, "class-refinement", pass_if(ok));
  });

  guarded(report, subject, "linear-orthonormal", [&] {
    const auto chars = linear_characters(h.group());
    bool ok = true;
    for (std::size_t a = 0; a < chars.size(); ++a) {
      for (std::size_t b = 0; b < chars.size(); ++b) {
        ok = ok && inner_product(chars[a].to_character(), chars[b].to_character()) == (a == b ? 1 : 0);
      }
    }
    report.add(subject, "linear-orthonormal", pass_if(ok), std::to_string(chars.size()) + " characters");
  });

  guarded(report, subject, "class-function", [&] {
    std::vector<Cyclotomic> traces;
    for (Elem x = 0; x < h.order(); ++x) traces.push_back(rho(x).trace());
    const auto chi = Character::from_element_values(h.group(), traces);
    report.add(subject, "class-function", pass_if(chi == rho.character()));
  });

  guarded(report, subject, "invariant-oracles", [&] {
    const auto k = invariant_dim_kernel(rho);
    const auto c = invariant_dim_char(rho);
    report.add(subject, "invariant-oracles", pass_if(k == c), "kernel=" + std::to_string(k) + " char=" + std::to_string(c));
  });

  guarded(report, subject, "twist-bijection", [&] { report.add(subject, "twist-bijection", pass_if(twist_bijection(rho))); });

  guarded(report, subject, "conj-inner", [&] {
    bool ok = true;
    for (Elem x : h.members()) ok = ok && conj_rep(rho, h, x).character() == rho.character();
    report.add(subject, "conj-inner", pass_if(ok));
  });

  const GaloisModel model = fx.model();
  std::optional<MatrixRep> as;
  guarded(report, subject, "asai-homomorphism", [&] {
    as = tensor_induce(model);
    const bool all = g.order() <= 64;
    const bool ok = !find_homomorphism_violation(*as, all);
    report.add(subject, "asai-homomorphism", pass_if(ok), all ? "all pairs" : "generator pairs");
  });
  if (as) {
    guarded(report, subject, "asai-degree", [&] {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < model.index(); ++i) expected *= rho.degree();
      bool ok = as->degree() == expected;
      const long e = static_cast<long>(g.exponent());
      for (Elem x : g.generators()) ok = ok && as->operator()(x).determinant().pow(e).is_one();
      report.add(subject, "asai-degree", pass_if(ok), "degree=" + std::to_string(as->degree()));
    });
    guarded(report, subject, "restriction-identity", [&] {
      const auto lhs = restrict(*as, h).character();
      report.add(subject, "restriction-identity", pass_if(lhs == product_of_conjugates(model)));
    });
    guarded(report, subject, "representative-independence", [&] {
      std::vector<Elem> reps;
      for (const auto& c : model.cosets()) reps.push_back(c.members.back());
      const auto alt = tensor_induce(model, reps);
      report.add(subject, "representative-independence", pass_if(alt.character() == as->character()));
    });
  }

  std::optional<Stabilizer> stab;
  guarded(report, subject, "stabilizer", [&] {
    stab = stabilizer(model);
    const bool ok = model.index() % stab->m() == 0;
    report.add(subject, "stabilizer", pass_if(ok), "m=" + std::to_string(stab->m()) + " d=" + std::to_string(model.index()));
  });
  if (!stab) return;

  guarded(report, subject, "stable-identity", [&] {
    const auto r = verify_stable_identity(model, *stab);
    std::string detail;
    for (const auto& d : r.diffs) detail += (detail.empty() ? "" : "; ") + d;
    report.add(subject, "stable-identity", pass_if(r.holds), detail);
  });

  guarded(report, subject, "tate-monotone", [&] {
    const auto full = brute_tate_count(model).count;
    const std::vector<Elem> none;
    const auto trivial = brute_tate_count(model, Subgroup(h.group(), none)).count;
    bool ok = full <= trivial;
    std::string detail = "H=" + std::to_string(full);
    if (fx.k) {
      const auto mid = brute_tate_count(model, *fx.k).count;
      ok = ok && full <= mid && mid <= trivial;
      detail += " K=" + std::to_string(mid);
    }
    report.add(subject, "tate-monotone", pass_if(ok), detail + " 1=" + std::to_string(trivial));
  });

  guarded(report, subject, "formula", [&] {
    const auto cmp = compare_with_formula(model, *stab, whole_group(h.group()));
    report.add(subject, "formula", Status::Info,
               "m=" + std::to_string(cmp.m) + " d=" + std::to_string(cmp.d) + " formula=" + cmp.formula.get_str() +
                   " brute=" + std::to_string(cmp.brute) + " agree=" + (cmp.agree ? "true" : "false") + " (" + cmp.note + ")");
    if (cmp.envelope) {
      report.add(subject, "envelope", pass_if(cmp.envelope_agree),
                 "formula=" + cmp.formula.get_str() + " weights=" + std::to_string(*cmp.envelope));
    } else {
      report.add(subject, "envelope", Status::Info, "beyond the weight dimension cap");
    }
  });

  const bool quadratic = std::any_of(stab->representatives.begin(), stab->representatives.end(),
                                     [&](Elem t) { return !h.contains(t) && h.contains(g.mul(t, t)); });
  if (quadratic) {
    guarded(report, subject, "descent", [&] {
      const auto r = twist_to_descend(model, *stab);
      if (r.mu) {
        report.add(subject, "descent", pass_if(r.verified), "mu=" + r.mu->to_string() + " witness=" + r.witness.to_string());
      } else {
        report.add(subject, "descent", pass_if(r.certified_none), "no mu; witness=" + r.witness.to_string() + " certified by exhaustion");
      }
    });
  }

  guarded(report, subject, "random-oracles", [&] {
    std::mt19937 gen(0x7a7e5eedU);
    const auto chars = linear_characters(h.group());
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
      const auto& l1 = chars[gen() % chars.size()];
      const auto& l2 = chars[gen() % chars.size()];
      const Elem t = model.representative(gen() % model.index());
      MatrixRep combo = twist(rho, l1);
      switch (gen() % 3) {
        case 0:
          combo = tensor(combo, rho);
          break;
        case 1:
          combo = tensor(combo, conj_rep(rho, h, t));
          break;
        default:
          combo = tensor(combo, twist(conj_rep(rho, h, t), l2));
          break;
      }
      ok = ok && invariant_dim_kernel(combo) == invariant_dim_char(combo);
    }
    report.add(subject, "random-oracles", pass_if(ok), "5 combinations");
  });
}

RunReport verify_directory(const std::filesystem::path& dir, const std::string& command) {
  if (!std::filesystem::is_directory(dir)) throw InvalidArgument("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".model") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  RunReport report(command);
  for (const auto& path : files) {
    const std::string subject = path.filename().string();
    std::optional<ModelFixture> fx;
    try {
      fx = load_model(path);
      report.add(subject, "load", Status::Pass);
    } catch (const std::exception& e) {
      report.add(subject, "load", Status::Fail, e.what());
      continue;
    }
    verify_model(*fx, subject, report);
  }
  return report;
}

}  // namespace tate

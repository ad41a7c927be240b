#include "condalg/verify.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "condalg/cond_alg.hpp"
#include "condalg/duality.hpp"
#include "condalg/extensions.hpp"
#include "condalg/frame.hpp"
#include "condalg/generators.hpp"
#include "condalg/io.hpp"
#include "condalg/multimodal.hpp"
#include "condalg/structure.hpp"
#include "condalg/varieties.hpp"

namespace condalg {

bool VerifyReport::all_passed() const {
  for (const CriterionResult& c : criteria)
    if (!c.passed) return false;
  return !criteria.empty();
}

namespace {

struct CorpusEntry {
  std::string name;
  CondAlg alg;
};

CondAlg kernel_table(int atoms, const std::vector<Elem>& kernel) {
  const FinBoolAlg B(atoms);
  const Elem N = B.size();
  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(N) * N);
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b) {
      Elem val = 0;
      for (Elem x : kernel)
        if ((x & a & (B.top() ^ b)) == 0) val |= x;
      table.push_back(val & B.top());
    }
  return CondAlg(B, std::move(table));
}

CondAlg mutant_proj2() {
  std::vector<Elem> t = proj_algebra(2).table();
  t[(3u << 2) | 1] = 3;  // 3 -> 1 := 1 now breaks C2 at (3, 1, 2)
  return CondAlg(FinBoolAlg(2), std::move(t));
}

std::vector<CorpusEntry> build_corpus(const VerifyConfig& cfg) {
  std::vector<CorpusEntry> out;
  const std::vector<AxiomId> ca = {AxiomId::C1, AxiomId::C2, AxiomId::C3};
  for (int n = 0; n <= 1; ++n) {
    GenSpec spec;
    spec.kind = GenKind::Exhaustive;
    spec.atoms = n;
    const std::vector<CondAlg> found = search(spec, ca, {}, 64);
    for (std::size_t i = 0; i < found.size(); ++i)
      out.push_back({"exhaustive-n" + std::to_string(n) + "-" +
                         std::to_string(i),
                     found[i]});
  }
  out.push_back(
      {"proj2", cfg.inject_mutant ? mutant_proj2() : proj_algebra(2)});
  out.push_back({"glob2", glob_algebra(2)});
  out.push_back({"glob3", glob_algebra(3)});
  out.push_back({"chain3", kernel_table(3, {0, 1, 3, 7})});
  out.push_back({"psb-c8-not-c6",
                 CondAlg(FinBoolAlg(2),
                         {3, 3, 3, 3, 0, 0, 0, 3, 0, 0, 1, 3, 0, 0, 0, 3})});
  for (int n = 2; n <= 3; ++n) {
    const int count = n == 2 ? cfg.n2_samples : cfg.n3_samples;
    std::mt19937_64 rng(cfg.seed ^
                        (0x9e3779b97f4a7c15ULL * static_cast<unsigned>(n)));
    for (int i = 0; i < count; ++i) {
      CondAlg a = [&] {
        switch (i % 5) {
          case 0: return random_from_frame_algebra(n, rng);
          case 1: return random_kernel_algebra(n, rng);
          case 2: return random_row_algebra(n, true, true, rng);
          case 3: return random_projection_algebra(n, rng);
          default: return random_row_algebra(n, true, true, rng);
        }
      }();
      out.push_back({"sample-n" + std::to_string(n) + "-" + std::to_string(i),
                     std::move(a)});
    }
  }
  return out;
}

std::string describe(const Verdict& v) {
  std::string s = v.note;
  for (const Binding& b : v.counterexample)
    s += " " + b.name + "=" + std::to_string(b.value);
  return s;
}

std::string run_command(const std::string& cmd, int& exit_code) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  exit_code =
      (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

template <typename Body>
CriterionResult run_criterion(int index, const char* title,
                              std::int64_t budget_ms, Body&& body) {
  CriterionResult r;
  r.index = index;
  r.title = title;
  r.budget_ms = budget_ms;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("unhandled: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  if (r.passed && r.elapsed_ms > r.budget_ms) {
    r.passed = false;
    r.detail += "; over the time budget";
  }
  return r;
}

void criterion_dual_output(const VerifyConfig& cfg, CriterionResult& r) {
  const CondAlg p2 = proj_algebra(2);
  std::vector<Triple> want;
  for (int u = 0; u < 2; ++u)
    for (PointSet Z = 0; Z < 4; ++Z) want.push_back({u, Z, u});
  const TFrame expected(2, want);
  const std::string expected_text = serialize_frame(expected);
  std::string bad;
  if (!(ultrafilter_frame(p2) == expected))
    bad = "computed dual differs from the canonical triple list";
  std::string out;
  if (!cfg.cli_path.empty()) {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "condalg-accept-proj2.json";
    {
      std::ofstream f(path);
      f << serialize_algebra(p2);
    }
    int rc = -1;
    out = run_command(
        "\"" + cfg.cli_path + "\" dual \"" + path.string() + "\"", rc);
    std::error_code ec;
    std::filesystem::remove(path, ec);
    if (bad.empty() && rc != 0)
      bad = "dual exited with status " + std::to_string(rc);
  } else {
    out = serialize_frame(ultrafilter_frame(p2));
  }
  if (bad.empty() && out != expected_text)
    bad = "dual output is not the canonical serialization";
  r.passed = bad.empty();
  r.detail = r.passed
                 ? std::string(cfg.cli_path.empty() ? "in-process" : "external")
                       + " output matches the 8 canonical triples"
                 : bad;
}

void criterion_exhaustive_baseline(CriterionResult& r) {
  GenSpec spec;
  spec.kind = GenKind::Exhaustive;
  spec.atoms = 1;
  const std::vector<CondAlg> found =
      search(spec, {AxiomId::C1, AxiomId::C2, AxiomId::C3}, {}, 100);
  // Naive oracle: literal law loops over all 16 one-atom tables.
  std::vector<std::vector<Elem>> oracle;
  for (Elem t00 = 0; t00 < 2; ++t00)
    for (Elem t01 = 0; t01 < 2; ++t01)
      for (Elem t10 = 0; t10 < 2; ++t10)
        for (Elem t11 = 0; t11 < 2; ++t11) {
          const Elem t[2][2] = {{t00, t01}, {t10, t11}};
          bool ok = true;
          for (Elem a = 0; a < 2 && ok; ++a) ok = t[a][1] == 1;
          for (Elem a = 0; a < 2 && ok; ++a)
            for (Elem b = 0; b < 2 && ok; ++b)
              for (Elem c = 0; c < 2 && ok; ++c) {
                if (t[a][b & c] != (t[a][b] & t[a][c])) ok = false;
                if ((t[a | b][c] & t[a][c] & t[b][c]) != t[a | b][c])
                  ok = false;
              }
          if (ok) oracle.push_back({t00, t01, t10, t11});
        }
  std::string bad;
  if (found.size() != 3 || oracle.size() != 3)
    bad = "expected 3 algebras, search found " +
          std::to_string(found.size()) + ", oracle found " +
          std::to_string(oracle.size());
  for (std::size_t i = 0; bad.empty() && i < 3; ++i)
    if (found[i].table() != oracle[i])
      bad = "search and oracle disagree at position " + std::to_string(i);
  r.passed = bad.empty();
  r.detail = r.passed ? "search and the 16-table oracle both find 3" : bad;
}

void criterion_representation(const std::vector<CorpusEntry>& corpus,
                              CriterionResult& r) {
  std::string bad;
  int exhaustive = 0;
  int samples23 = 0;
  for (const CorpusEntry& e : corpus) {
    if (e.name.rfind("exhaustive-", 0) == 0) ++exhaustive;
    if (e.name.rfind("sample-", 0) == 0 && e.alg.base().atoms() >= 2)
      ++samples23;
    const Verdict ca = check_CA(e.alg);
    if (!ca.holds) {
      if (bad.empty()) bad = "check_CA failed on " + e.name + ":" + describe(ca);
      continue;
    }
    const Verdict rep = representation_check(e.alg);
    if (!rep.holds && bad.empty())
      bad = "representation failed on " + e.name + ":" + describe(rep);
  }
  if (bad.empty() && exhaustive != 4)
    bad = "expected the 4 exhaustive small algebras, found " +
          std::to_string(exhaustive);
  if (bad.empty() && samples23 < 1000)
    bad = "sample floor not met: " + std::to_string(samples23) + " < 1000";
  r.passed = bad.empty();
  r.detail = r.passed ? std::to_string(corpus.size()) + " algebras (" +
                            std::to_string(samples23) +
                            " samples at 2 or 3 atoms), zero failures"
                      : bad;
}

void criterion_roundtrips(const VerifyConfig& cfg,
                          const std::vector<CorpusEntry>& corpus,
                          CriterionResult& r) {
  std::string bad;
  for (const CorpusEntry& e : corpus) {
    const Verdict v = co_es_roundtrip(e.alg);
    if (!v.holds && bad.empty())
      bad = "algebra roundtrip failed on " + e.name + ":" + describe(v);
  }
  std::mt19937_64 rng(cfg.seed ^ 0x65735f636fULL);
  int frames = 0;
  for (int i = 0; i < cfg.es_co_frames; ++i) {
    const int points = 1 + i % 4;
    const int flavor = (i / 4) % kFrameFlavors;
    const TFrame f = random_upward_closed_frame(points, flavor, rng);
    ++frames;
    const Verdict v = es_co_roundtrip(f);
    if (!v.holds && bad.empty())
      bad = "frame roundtrip failed at frame " + std::to_string(i) + ":" +
            describe(v);
  }
  if (bad.empty() && frames < 500)
    bad = "frame floor not met: " + std::to_string(frames) + " < 500";
  r.passed = bad.empty();
  r.detail = r.passed ? std::to_string(corpus.size()) + " algebras and " +
                            std::to_string(frames) +
                            " frames roundtrip cleanly"
                      : bad;
}

void criterion_extensions(const std::vector<CorpusEntry>& corpus,
                          CriterionResult& r) {
  std::string bad;
  for (const CorpusEntry& e : corpus) {
    const int m = e.alg.base().ultrafilter_count();
    const CondAlg E = em(e.alg);
    const UfSet NU = UfSet{1} << m;
    std::vector<Elem> pi_table, sigma_table;
    pi_table.reserve(NU * NU);
    sigma_table.reserve(NU * NU);
    for (UfSet U = 0; U < NU && bad.empty(); ++U)
      for (UfSet V = 0; V < NU; ++V) {
        const UfSet p = pi_extend(e.alg, U, V);
        const UfSet s = sigma_extend(e.alg, U, V);
        const UfSet t = E.cond(static_cast<Elem>(U), static_cast<Elem>(V));
        if ((s & ~p & (NU - 1)) != 0) {
          bad = "sigma exceeds pi on " + e.name;
          break;
        }
        if (p != t || s != t) {
          bad = "extension disagrees with the transported operator on " +
                e.name + " at U=" + std::to_string(U) +
                " V=" + std::to_string(V);
          break;
        }
        pi_table.push_back(static_cast<Elem>(p));
        sigma_table.push_back(static_cast<Elem>(s));
      }
    if (!bad.empty()) break;
    const Verdict vp = check_CA(CondAlg(FinBoolAlg(m), std::move(pi_table)));
    if (!vp.holds) {
      bad = "pi extension of " + e.name + " is not a CA:" + describe(vp);
      break;
    }
    const Verdict vs =
        check_CA(CondAlg(FinBoolAlg(m), std::move(sigma_table)));
    if (!vs.holds) {
      bad = "sigma extension of " + e.name + " is not a CA:" + describe(vs);
      break;
    }
  }
  r.passed = bad.empty();
  r.detail = r.passed ? "pi = sigma = transported operator on " +
                            std::to_string(corpus.size()) + " algebras"
                      : bad;
}

void criterion_multimodal(const std::vector<CorpusEntry>& corpus,
                          CriterionResult& r) {
  std::string bad;
  for (const CorpusEntry& e : corpus) {
    const MMAlg mm = to_mma(e.alg);
    if (!(to_conditional(mm) == e.alg)) {
      if (bad.empty()) bad = "translation roundtrip broke on " + e.name;
      continue;
    }
    const Verdict ax = check_mma_axioms(mm);
    if (!ax.holds && bad.empty()) {
      bad = "modal axioms failed on " + e.name + ":" + describe(ax);
      continue;
    }
    const Verdict q = qa_equals_box_phi_check(e.alg);
    if (!q.holds && bad.empty())
      bad = "box transfer failed on " + e.name + ":" + describe(q);
  }
  r.passed = bad.empty();
  r.detail = r.passed ? "roundtrip, modal axioms and box transfer on " +
                            std::to_string(corpus.size()) + " algebras"
                      : bad;
}

void criterion_correspondence(const std::vector<CorpusEntry>& corpus,
                              CriterionResult& r) {
  const AxiomId axs[] = {AxiomId::C1star, AxiomId::C4, AxiomId::C5,
                         AxiomId::C6,     AxiomId::C7, AxiomId::C8};
  std::string bad;
  std::string buckets;
  for (AxiomId ax : axs) {
    int sat = 0, viol = 0, total = 0;
    for (const CorpusEntry& e : corpus) {
      if (e.alg.base().atoms() > 3) continue;
      ++total;
      const Verdict v = correspondence_check(e.alg, ax);
      if (!v.holds && bad.empty())
        bad = std::string(axiom_name(ax)) + " correspondence failed on " +
              e.name + ":" + describe(v);
      if (check_axiom(e.alg, ax).holds)
        ++sat;
      else
        ++viol;
    }
    if (bad.empty() && total < 500)
      bad = std::string(axiom_name(ax)) + " floor not met: " +
            std::to_string(total) + " < 500";
    if (bad.empty() && (sat == 0 || viol == 0))
      bad = std::string("corpus lacks ") +
            (sat == 0 ? "satisfying" : "violating") + " instances of " +
            axiom_name(ax);
    if (!buckets.empty()) buckets += ", ";
    buckets += std::string(axiom_name(ax)) + " " + std::to_string(sat) + "/" +
               std::to_string(viol);
  }
  r.passed = bad.empty();
  r.detail = r.passed ? "sat/viol per axiom: " + buckets : bad;
}

void criterion_canonicity(const VerifyConfig& cfg, CriterionResult& r) {
  const FrameCondId conds[] = {FrameCondId::T3star, FrameCondId::T4,
                               FrameCondId::T5,     FrameCondId::T6,
                               FrameCondId::T7,     FrameCondId::T8};
  std::string bad;
  std::string buckets;
  int ci = 0;
  for (FrameCondId cond : conds) {
    std::mt19937_64 rng(cfg.seed ^ (0x63616e00ULL + static_cast<unsigned>(ci)));
    ++ci;
    int sat = 0, total = 0;
    for (int i = 0; i < cfg.per_cond_frames; ++i) {
      const int points = 1 + i % 4;
      const int flavor = (i / 4) % kFrameFlavors;
      const TFrame f = random_upward_closed_frame(points, flavor, rng);
      ++total;
      const Verdict v = canonicity_check(f, cond);
      if (!v.holds && bad.empty())
        bad = std::string(frame_cond_name(cond)) +
              " canonicity failed at frame " + std::to_string(i) + ":" +
              describe(v);
      if (check_frame_condition(f, cond).holds) ++sat;
    }
    if (bad.empty() && total < 200)
      bad = std::string(frame_cond_name(cond)) + " floor not met: " +
            std::to_string(total) + " < 200";
    if (bad.empty() && (sat == 0 || sat == total))
      bad = std::string("frame corpus lacks ") +
            (sat == 0 ? "satisfying" : "violating") + " instances of " +
            frame_cond_name(cond);
    if (!buckets.empty()) buckets += ", ";
    buckets += std::string(frame_cond_name(cond)) + " " + std::to_string(sat) +
               "/" + std::to_string(total - sat);
  }
  r.passed = bad.empty();
  r.detail = r.passed ? "sat/viol per condition: " + buckets : bad;
}

void criterion_structure(const std::vector<CorpusEntry>& corpus,
                         CriterionResult& r) {
  std::string bad;
  for (const CorpusEntry& e : corpus) {
    const Verdict vs = subalgebra_duality_check(e.alg);
    if (!vs.holds && bad.empty()) {
      bad = "subalgebra duality failed on " + e.name + ":" + describe(vs);
      continue;
    }
    const Verdict vc = congruence_duality_check(e.alg);
    if (!vc.holds && bad.empty())
      bad = "congruence duality failed on " + e.name + ":" + describe(vc);
  }
  const CondAlg g2 = glob_algebra(2);
  std::vector<UfSet> g2lattice;
  for (UfSet Y = 0; Y < 4; ++Y)
    if (theta_compatible(g2, Y)) g2lattice.push_back(Y);
  if (bad.empty() && g2lattice != std::vector<UfSet>{0, 3})
    bad = "glob2 congruence lattice is not {theta(empty), theta(Ul)}";
  const CondAlg p2 = proj_algebra(2);
  int p2count = 0;
  for (UfSet Y = 0; Y < 4; ++Y)
    if (theta_compatible(p2, Y)) ++p2count;
  if (bad.empty() && p2count != 4)
    bad = "proj2 congruence count is " + std::to_string(p2count) + ", not 4";
  r.passed = bad.empty();
  r.detail = r.passed ? "both dualities on " + std::to_string(corpus.size()) +
                            " algebras; lattice sizes 2 and 4 as expected"
                      : bad;
}

void criterion_varieties(const std::vector<CorpusEntry>& corpus,
                         CriterionResult& r) {
  const std::pair<VarietyTag, VarietyTag> edges[] = {
      {VarietyTag::PSB, VarietyTag::CA},
      {VarietyTag::PsC, VarietyTag::PSB},
      {VarietyTag::SIA, VarietyTag::PSB},
      {VarietyTag::S2IA, VarietyTag::SIA},
      {VarietyTag::S2IA, VarietyTag::PsC},
  };
  auto has_tag = [](const std::vector<VarietyTag>& tags, VarietyTag t) {
    for (VarietyTag x : tags)
      if (x == t) return true;
    return false;
  };
  std::string bad;
  for (const CorpusEntry& e : corpus) {
    const std::vector<VarietyTag> tags = classify_variety(e.alg);
    for (const auto& [lower, upper] : edges)
      if (has_tag(tags, lower) && !has_tag(tags, upper) && bad.empty())
        bad = "poset closure broken on " + e.name + ": " +
              variety_name(lower) + " without " + variety_name(upper);
    if (e.name == "glob2" && tags.size() != 5 && bad.empty())
      bad = "glob2 classified into " + std::to_string(tags.size()) +
            " varieties, not all 5";
    if (e.name == "proj2" && bad.empty() &&
        !(tags.size() == 1 && tags[0] == VarietyTag::CA))
      bad = "proj2 did not classify into exactly {CA}";
  }
  r.passed = bad.empty();
  r.detail = r.passed ? "membership upward closed on " +
                            std::to_string(corpus.size()) +
                            " algebras; fixtures classify as expected"
                      : bad;
}

void criterion_mutation(CriterionResult& r) {
  const CondAlg mut = mutant_proj2();
  std::string bad;
  const Verdict ca = check_CA(mut);
  if (ca.holds) bad = "mutant slipped through check_CA";
  if (bad.empty() && !check_axiom(mut, AxiomId::C1).holds)
    bad = "mutant unexpectedly breaks C1";
  if (bad.empty() && check_axiom(mut, AxiomId::C2).holds)
    bad = "mutant does not break C2";
  // Independent lex scan for the least C2 counterexample.
  Elem ea = 0, eb = 0, ec = 0;
  bool found = false;
  for (Elem a = 0; a < 4 && !found; ++a)
    for (Elem b = 0; b < 4 && !found; ++b)
      for (Elem c = 0; c < 4 && !found; ++c)
        if ((mut.cond(a, b) & mut.cond(a, c)) != mut.cond(a, b & c)) {
          ea = a;
          eb = b;
          ec = c;
          found = true;
        }
  if (bad.empty() && (!found || ea != 3 || eb != 1 || ec != 2))
    bad = "independent scan did not land on (3, 1, 2)";
  if (bad.empty() &&
      (ca.counterexample.size() != 3 || ca.counterexample[0].value != ea ||
       ca.counterexample[1].value != eb || ca.counterexample[2].value != ec))
    bad = "reported counterexample is not the lex-least one:" + describe(ca);
  r.passed = bad.empty();
  r.detail = r.passed ? "C2 mutant caught at (a=3, b=1, c=2)" : bad;
}

}  // namespace

VerifyReport run_verify_suite(const VerifyConfig& cfg) {
  VerifyReport rep;
  rep.seed = cfg.seed;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CorpusEntry> corpus = build_corpus(cfg);
  rep.criteria.push_back(run_criterion(
      1, "dual output on the four-element projection algebra", 1000,
      [&](CriterionResult& r) { criterion_dual_output(cfg, r); }));
  rep.criteria.push_back(run_criterion(
      2, "exhaustive one-atom baseline against a naive oracle", 1000,
      [&](CriterionResult& r) { criterion_exhaustive_baseline(r); }));
  rep.criteria.push_back(run_criterion(
      3, "representation embedding across the corpus", 60000,
      [&](CriterionResult& r) { criterion_representation(corpus, r); }));
  rep.criteria.push_back(run_criterion(
      4, "duality roundtrips both ways", 60000,
      [&](CriterionResult& r) { criterion_roundtrips(cfg, corpus, r); }));
  rep.criteria.push_back(run_criterion(
      5, "pi and sigma extensions match the transported operator", 120000,
      [&](CriterionResult& r) { criterion_extensions(corpus, r); }));
  rep.criteria.push_back(run_criterion(
      6, "multimodal translation roundtrip and box transfer", 60000,
      [&](CriterionResult& r) { criterion_multimodal(corpus, r); }));
  rep.criteria.push_back(run_criterion(
      7, "axiom to frame-condition correspondence", 180000,
      [&](CriterionResult& r) { criterion_correspondence(corpus, r); }));
  rep.criteria.push_back(run_criterion(
      8, "frame-condition canonicity", 180000,
      [&](CriterionResult& r) { criterion_canonicity(cfg, r); }));
  rep.criteria.push_back(run_criterion(
      9, "subalgebra and congruence duality", 120000,
      [&](CriterionResult& r) { criterion_structure(corpus, r); }));
  rep.criteria.push_back(run_criterion(
      10, "variety poset closure", 10000,
      [&](CriterionResult& r) { criterion_varieties(corpus, r); }));
  rep.criteria.push_back(
      run_criterion(11, "mutation sensitivity", 1000,
                    [&](CriterionResult& r) { criterion_mutation(r); }));
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

std::string format_verify_report(const VerifyReport& rep) {
  std::ostringstream os;
  for (const CriterionResult& c : rep.criteria)
    os << "criterion " << (c.index < 10 ? " " : "") << c.index << ": "
       << (c.passed ? "PASS" : "FAIL") << "  " << c.title << " ["
       << c.elapsed_ms << " ms] " << c.detail << "\n";
  os << "verdict: " << (rep.all_passed() ? "ALL PASS" : "FAIL") << " ("
     << rep.criteria.size() << " criteria, " << rep.elapsed_ms << " ms, seed "
     << rep.seed << ")\n";
  return os.str();
}

}  // namespace condalg

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "condalg/cond_alg.hpp"
#include "condalg/duality.hpp"
#include "condalg/extensions.hpp"
#include "condalg/frame.hpp"
#include "condalg/generators.hpp"
#include "condalg/io.hpp"
#include "condalg/multimodal.hpp"
#include "condalg/structure.hpp"
#include "condalg/varieties.hpp"
#include "condalg/verify.hpp"

namespace {

using namespace condalg;
using nlohmann::ordered_json;

struct LawLine {
  std::string law;
  Verdict v;
};

struct Invocation {
  std::string command;
  ordered_json inputs = ordered_json::object();
  std::vector<LawLine> lines;
  std::string text_body;  // documents or listings; verdicts follow it
  ordered_json output;    // json-mode counterpart of text_body
  std::uint64_t seed = 0;
  bool failed = false;    // set when some law fails
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bindings_text(const Verdict& v) {
  std::string s;
  for (const Binding& b : v.counterexample)
    s += " " + b.name + "=" + std::to_string(b.value);
  return s;
}

void push(Invocation& inv, std::string law, Verdict v) {
  if (!v.holds) inv.failed = true;
  inv.lines.push_back({std::move(law), std::move(v)});
}

int emit(const Invocation& inv, bool json_mode,
         std::chrono::steady_clock::time_point t0) {
  const std::int64_t elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count();
  if (json_mode) {
    ordered_json rep;
    rep["command"] = inv.command;
    rep["inputs"] = inv.inputs;
    ordered_json verdicts = ordered_json::array();
    for (const LawLine& l : inv.lines) {
      ordered_json j;
      j["law"] = l.law;
      j["holds"] = l.v.holds;
      if (!l.v.counterexample.empty()) {
        ordered_json cex = ordered_json::object();
        for (const Binding& b : l.v.counterexample) cex[b.name] = b.value;
        j["counterexample"] = cex;
      }
      if (!l.v.note.empty()) j["note"] = l.v.note;
      verdicts.push_back(std::move(j));
    }
    rep["verdicts"] = std::move(verdicts);
    rep["seed"] = inv.seed;
    rep["elapsed_ms"] = elapsed;
    if (!inv.output.is_null()) rep["output"] = inv.output;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << inv.text_body;
    for (const LawLine& l : inv.lines) {
      std::cout << l.law << ": " << (l.v.holds ? "holds" : "fails")
                << bindings_text(l.v);
      if (!l.v.note.empty()) std::cout << " (" << l.v.note << ")";
      std::cout << "\n";
    }
  }
  return inv.failed ? 1 : 0;
}

std::vector<AxiomId> parse_axiom_list(const std::string& list) {
  std::vector<AxiomId> out;
  std::string cur;
  std::istringstream ss(list);
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) out.push_back(parse_axiom_id(cur));
  return out;
}

std::string set_text(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) {
      if (!first) s += ", ";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

VerifyConfig load_verify_config(const std::string& path,
                                const std::string& self) {
  VerifyConfig cfg;
  cfg.cli_path = self;
  if (path.empty()) return cfg;
  ordered_json j;
  try {
    j = ordered_json::parse(slurp(path));
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) throw InputError("config must be an object");
  for (const auto& [key, val] : j.items()) {
    if (key == "seed")
      cfg.seed = val.get<std::uint64_t>();
    else if (key == "n2_samples")
      cfg.n2_samples = val.get<int>();
    else if (key == "n3_samples")
      cfg.n3_samples = val.get<int>();
    else if (key == "es_co_frames")
      cfg.es_co_frames = val.get<int>();
    else if (key == "per_cond_frames")
      cfg.per_cond_frames = val.get<int>();
    else if (key == "inject_mutant")
      cfg.inject_mutant = val.get<bool>();
    else if (key == "cli_path")
      cfg.cli_path = val.get<std::string>();
    else
      throw InputError("unknown config key: " + key);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string self = argc > 0 ? argv[0] : "condalg";
  CLI::App app{"finite conditional-algebra toolkit"};
  app.require_subcommand(1);
  // Let `--format` appear after the subcommand name as well as before it.
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, axiom, cond, config_path, kind = "exhaustive";
  std::string require_list, forbid_list;
  int atoms = 1;
  std::size_t limit = 10;
  std::uint64_t seed = 0;

  CLI::App* c_check = app.add_subcommand("check", "check algebra laws");
  c_check->add_option("file", file)->required();
  c_check->add_option("--axiom", axiom, "single law to check");

  CLI::App* c_classify =
      app.add_subcommand("classify", "variety memberships");
  c_classify->add_option("file", file)->required();

  CLI::App* c_dual =
      app.add_subcommand("dual", "ultrafilter frame of an algebra");
  c_dual->add_option("file", file)->required();

  CLI::App* c_cm = app.add_subcommand("cm", "complex algebra of a frame");
  c_cm->add_option("file", file)->required();

  CLI::App* c_em =
      app.add_subcommand("em", "canonical extension of an algebra");
  c_em->add_option("file", file)->required();

  CLI::App* c_round =
      app.add_subcommand("roundtrip", "duality roundtrip for either document");
  c_round->add_option("file", file)->required();

  CLI::App* c_corr =
      app.add_subcommand("correspond", "axiom versus dual frame condition");
  c_corr->add_option("file", file)->required();
  c_corr->add_option("--axiom", axiom)->required();

  CLI::App* c_canon =
      app.add_subcommand("canonicity", "frame condition versus its equation");
  c_canon->add_option("file", file)->required();
  c_canon->add_option("--cond", cond)->required();

  CLI::App* c_sub = app.add_subcommand("subalgebras", "conditional subalgebras");
  c_sub->add_option("file", file)->required();

  CLI::App* c_cong = app.add_subcommand("congruences", "conditional congruences");
  c_cong->add_option("file", file)->required();

  CLI::App* c_mma =
      app.add_subcommand("mma", "induced multimodal algebra checks");
  c_mma->add_option("file", file)->required();

  CLI::App* c_ext = app.add_subcommand("extensions", "pi and sigma extensions");
  c_ext->add_option("file", file)->required();

  CLI::App* c_search = app.add_subcommand("search", "model search");
  c_search->add_option("--atoms", atoms)->required();
  c_search->add_option("--require", require_list, "comma-separated axioms");
  c_search->add_option("--forbid", forbid_list, "comma-separated axioms");
  c_search->add_option("--limit", limit, "result cap (default 10)");
  c_search->add_option("--seed", seed);
  c_search->add_option("--kind", kind, "generator kind");

  CLI::App* c_verify =
      app.add_subcommand("verify-suite", "the full acceptance battery");
  c_verify->add_option("--config", config_path, "json config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const bool json_mode = format == "json";
  Invocation inv;
  try {
    if (c_check->parsed()) {
      inv.command = "check";
      inv.inputs["file"] = file;
      const CondAlg A = parse_algebra(slurp(file));
      if (axiom.empty()) {
        for (AxiomId id : {AxiomId::C1, AxiomId::C2, AxiomId::C3})
          push(inv, axiom_name(id), check_axiom(A, id));
      } else {
        inv.inputs["axiom"] = axiom;
        const AxiomId id = parse_axiom_id(axiom);
        push(inv, axiom_name(id), check_axiom(A, id));
      }
    } else if (c_classify->parsed()) {
      inv.command = "classify";
      inv.inputs["file"] = file;
      const CondAlg A = parse_algebra(slurp(file));
      const std::vector<VarietyTag> tags = classify_variety(A);
      bool in_ca = false;
      for (VarietyTag t : all_variety_tags()) {
        Verdict v;
        v.holds = std::find(tags.begin(), tags.end(), t) != tags.end();
        if (t == VarietyTag::CA) in_ca = v.holds;
        inv.lines.push_back({variety_name(t), v});
      }
      inv.failed = !in_ca;
    } else if (c_dual->parsed()) {
      inv.command = "dual";
      inv.inputs["file"] = file;
      const CondAlg A = parse_algebra(slurp(file));
      inv.text_body = serialize_frame(ultrafilter_frame(A));
      inv.output = ordered_json::parse(inv.text_body);
    } else if (c_cm->parsed()) {
      inv.command = "cm";
      inv.inputs["file"] = file;
      const TFrame f = parse_frame(slurp(file));
      inv.text_body = serialize_algebra(cm(f));
      inv.output = ordered_json::parse(inv.text_body);
    } else if (c_em->parsed()) {
      inv.command = "em";
      inv.inputs["file"] = file;
      const CondAlg A = parse_algebra(slurp(file));
      inv.text_body = serialize_algebra(em(A));
      inv.output = ordered_json::parse(inv.text_body);
    } else if (c_round->parsed()) {
      inv.command = "roundtrip";
      inv.inputs["file"] = file;
      const std::string doc = slurp(file);
      if (document_type(doc) == "conditional-algebra")
        push(inv, "co-es-roundtrip", co_es_roundtrip(parse_algebra(doc)));
      else
        push(inv, "es-co-roundtrip", es_co_roundtrip(parse_frame(doc)));
    } else if (c_corr->parsed()) {
      inv.command = "correspond";
      inv.inputs["file"] = file;
      inv.inputs["axiom"] = axiom;
      const CondAlg A = parse_algebra(slurp(file));
      const AxiomId id = parse_axiom_id(axiom);
      push(inv, std::string(axiom_name(id)) + " correspondence",
           correspondence_check(A, id));
    } else if (c_canon->parsed()) {
      inv.command = "canonicity";
      inv.inputs["file"] = file;
      inv.inputs["cond"] = cond;
      const TFrame f = parse_frame(slurp(file));
      const FrameCondId id = parse_frame_cond(cond);
      push(inv, std::string(frame_cond_name(id)) + " canonicity",
           canonicity_check(f, id));
    } else if (c_sub->parsed()) {
      inv.command = "subalgebras";
      inv.inputs["file"] = file;
      const CondAlg A = parse_algebra(slurp(file));
      const std::vector<SubalgRef> subs = enumerate_subalgebras(A);
      ordered_json list = ordered_json::array();
      for (std::size_t i = 0; i < subs.size(); ++i) {
        ordered_json elems = ordered_json::array();
        for (int e = 0; e < 64; ++e)
          if (subs[i].domain() >> e & 1) elems.push_back(e);
        list.push_back(std::move(elems));
        inv.text_body += "subalgebra " + std::to_string(i) + ": " +
                         set_text(subs[i].domain()) +
                         (cond_closed(A, subs[i]) ? " (conditional)" : "") +
                         "\n";
      }
      inv.output["subalgebras"] = std::move(list);
      push(inv, "subalgebra duality", subalgebra_duality_check(A));
    } else if (c_cong->parsed()) {
      inv.command = "congruences";
      inv.inputs["file"] = file;
      const CondAlg A = parse_algebra(slurp(file));
      const int m = A.base().ultrafilter_count();
      ordered_json list = ordered_json::array();
      for (UfSet Y = 0; Y < (UfSet{1} << m); ++Y)
        if (theta_compatible(A, Y)) {
          list.push_back(Y);
          inv.text_body += "theta(Y) with Y = " + set_text(Y) + "\n";
        }
      inv.output["congruences"] = std::move(list);
      push(inv, "congruence duality", congruence_duality_check(A));
    } else if (c_mma->parsed()) {
      inv.command = "mma";
      inv.inputs["file"] = file;
      const CondAlg A = parse_algebra(slurp(file));
      for (AxiomId id : {AxiomId::M1, AxiomId::M2, AxiomId::M3})
        push(inv, axiom_name(id), check_axiom(A, id));
      push(inv, "box transfer", qa_equals_box_phi_check(A));
    } else if (c_ext->parsed()) {
      inv.command = "extensions";
      inv.inputs["file"] = file;
      const CondAlg A = parse_algebra(slurp(file));
      push(inv, "smoothness", smoothness_check(A));
      const CondAlg E = em(A);
      const int m = A.base().ultrafilter_count();
      Verdict transfer;
      transfer.holds = true;
      for (UfSet U = 0; U < (UfSet{1} << m) && transfer.holds; ++U)
        for (UfSet V = 0; V < (UfSet{1} << m); ++V)
          if (pi_extend(A, U, V) !=
              E.cond(static_cast<Elem>(U), static_cast<Elem>(V))) {
            transfer = Verdict::fail(
                {{"U", U}, {"V", V}},
                "pi extension differs from the canonical extension");
            break;
          }
      push(inv, "extension transfer", transfer);
    } else if (c_search->parsed()) {
      inv.command = "search";
      inv.seed = seed;
      GenSpec spec;
      spec.kind = parse_gen_kind(kind);
      spec.atoms = atoms;
      spec.seed = seed;
      inv.inputs["kind"] = gen_kind_name(spec.kind);
      inv.inputs["atoms"] = atoms;
      inv.inputs["require"] = require_list;
      inv.inputs["forbid"] = forbid_list;
      inv.inputs["limit"] = limit;
      const std::vector<CondAlg> found =
          search(spec, parse_axiom_list(require_list),
                 parse_axiom_list(forbid_list), limit);
      ordered_json results = ordered_json::array();
      for (std::size_t i = 0; i < found.size(); ++i) {
        const std::string doc = serialize_algebra(found[i]);
        results.push_back(ordered_json::parse(doc));
        if (i > 0) inv.text_body += "\n";
        inv.text_body += doc;
      }
      inv.output["count"] = found.size();
      inv.output["results"] = std::move(results);
    } else if (c_verify->parsed()) {
      inv.command = "verify-suite";
      const VerifyConfig cfg = load_verify_config(config_path, self);
      if (!config_path.empty()) inv.inputs["config"] = config_path;
      inv.seed = cfg.seed;
      const VerifyReport rep = run_verify_suite(cfg);
      inv.failed = !rep.all_passed();
      ordered_json crits = ordered_json::array();
      for (const CriterionResult& c : rep.criteria) {
        Verdict v;
        v.holds = c.passed;
        v.note = c.detail;
        inv.lines.push_back(
            {"criterion " + std::to_string(c.index) + ": " + c.title, v});
        ordered_json j;
        j["index"] = c.index;
        j["title"] = c.title;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        j["elapsed_ms"] = c.elapsed_ms;
        j["budget_ms"] = c.budget_ms;
        crits.push_back(std::move(j));
      }
      inv.output["criteria"] = std::move(crits);
      inv.output["elapsed_ms"] = rep.elapsed_ms;
      if (!json_mode) {
        std::cout << format_verify_report(rep);
        return inv.failed ? 1 : 0;
      }
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return 2;
  }
  return emit(inv, json_mode, t0);
}

// Command-line front end: classify / realize / enumerate / verify / witness /
// transform. Default output is one JSON record per line on stdout; timing
// goes to stderr so the record stream is byte-stable across runs. Exit codes:
// 0 success (and zero verify discrepancies), 1 usage or input error,
// 2 verify discrepancies or no disconnected realization exists,
// 3 witness undecided (sequence exceeds the enumeration limit).

#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "forcibly/classifier.hpp"
#include "forcibly/degree_sequence.hpp"
#include "forcibly/enumeration.hpp"
#include "forcibly/graph.hpp"
#include "forcibly/switching.hpp"
#include "forcibly/witness.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace forcibly;

void emit(const json& record) { std::cout << record.dump() << "\n"; }

void emit_error(const std::string& command, const std::string& message, bool human) {
  if (human)
    std::cerr << "error: " << message << "\n";
  else
    std::cerr << json{{"record", "error"}, {"command", command}, {"message", message}}.dump()
              << "\n";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::filesystem::path ensure_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

std::vector<Edge> parse_edge_pairs(const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
      throw std::invalid_argument("bad edge '" + token + "', expected u-v");
    edges.push_back(make_edge(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1))));
  }
  return edges;
}

int cmd_classify(const std::string& text, const std::string& cls_name, bool human) {
  const DegreeSequence d = parse_sequence(text);
  ForciblyVerdict v;
  std::string cls = cls_name;
  if (cls_name == "auto") {
    v = classify_auto(d);
    cls = to_string(class_by_edge_count(d));
  } else if (cls_name == "tree") {
    v = classify_forcibly_tree(d);
  } else if (cls_name == "unicyclic") {
    v = classify_forcibly_unicyclic(d);
  } else {
    v = classify_forcibly_bicyclic(d);
  }
  if (human) {
    std::cout << d.render() << ": ";
    if (v.decision) {
      std::cout << "forcibly " << cls << " (family " << to_string(v.family);
      if (v.params)
        std::cout << ", params " << (*v.params)[0] << "," << (*v.params)[1] << ","
                  << (*v.params)[2];
      std::cout << ")\n";
    } else {
      std::cout << "not forcibly" << (cls == "other" ? "" : " " + cls) << " -- " << v.reason
                << "\n";
    }
    return 0;
  }
  json rec{{"command", "classify"}, {"record", "verdict"},       {"input", text},
           {"sequence", d.render()}, {"class", cls},             {"n", v.n},
           {"decision", v.decision}, {"family", to_string(v.family)}};
  if (v.params) rec["params"] = {(*v.params)[0], (*v.params)[1], (*v.params)[2]};
  rec["reason"] = v.reason;
  emit(rec);
  return 0;
}

int cmd_realize(const std::string& text, bool human, const std::string& out_dir) {
  const DegreeSequence d = parse_sequence(text);
  const Graph g = havel_hakimi_realize(d);
  const std::string edges = to_edge_list(g);
  if (!out_dir.empty()) write_file(ensure_out_dir(out_dir) / "realize.edgelist", edges);
  if (human) {
    std::cout << edges;
    return 0;
  }
  emit(json{{"command", "realize"}, {"record", "graph"}, {"input", text},
            {"sequence", d.render()}, {"n", g.vertex_count()}, {"m", g.edge_count()},
            {"connected", is_connected(g)}, {"class", to_string(structural_class(g))},
            {"edge_list", edges}});
  return 0;
}

int cmd_enumerate(const std::string& text, const std::string& mode_name,
                  const std::string& emit_name, int limit, bool human) {
  const DegreeSequence d = parse_sequence(text);
  const EnumerationMode mode =
      mode_name == "labeled" ? EnumerationMode::labeled : EnumerationMode::nonisomorphic;
  if (emit_name == "count") {
    const std::uint64_t count = count_realizations(d, mode, limit);
    if (human)
      std::cout << mode_name << " realizations of " << d.render() << ": " << count << "\n";
    else
      emit(json{{"command", "enumerate"}, {"record", "count"}, {"input", text},
                {"sequence", d.render()}, {"mode", mode_name}, {"count", count}});
    return 0;
  }
  RealizationStream stream(d, mode, limit);
  std::uint64_t index = 0;
  stream.for_each([&](const Graph& g) {
    if (human)
      std::cout << "# " << index << "\n" << to_edge_list(g);
    else
      emit(json{{"command", "enumerate"}, {"record", "graph"}, {"index", index},
                {"edge_list", to_edge_list(g)}});
    ++index;
    return true;
  });
  if (human)
    std::cout << "total: " << stream.count() << "\n";
  else
    emit(json{{"command", "enumerate"}, {"record", "count"}, {"input", text},
              {"sequence", d.render()}, {"mode", mode_name}, {"count", stream.count()}});
  return 0;
}

int cmd_verify(const std::string& cls_name, int max_n, int workers, int limit, bool human,
               const std::string& out_dir) {
  const SweepClass cls = cls_name == "tree"        ? SweepClass::tree
                         : cls_name == "unicyclic" ? SweepClass::unicyclic
                                                   : SweepClass::bicyclic;
  const SweepResult res = cross_check_sweep(cls, max_n, workers, limit);
  if (human) {
    std::cout << "class " << cls_name << ", n <= " << max_n << "\n";
    std::cout << std::setw(3) << "n" << std::setw(11) << "sequences" << std::setw(9) << "graphic"
              << std::setw(11) << "positives" << std::setw(15) << "discrepancies" << "\n";
    for (const auto& t : res.per_n)
      std::cout << std::setw(3) << t.n << std::setw(11) << t.sequences << std::setw(9) << t.graphic
                << std::setw(11) << t.positives << std::setw(15) << t.discrepancies << "\n";
    std::cout << "positives (" << res.positives.size() << "):\n";
    for (const auto& p : res.positives) {
      std::cout << "  n=" << p.verdict.n << "  " << std::left << std::setw(16) << p.seq.render()
                << std::right << to_string(p.verdict.family);
      if (p.verdict.params)
        std::cout << " params " << (*p.verdict.params)[0] << "," << (*p.verdict.params)[1] << ","
                  << (*p.verdict.params)[2];
      std::cout << "\n";
    }
    std::cout << "discrepancies (" << res.discrepancies.size() << ")\n";
  } else {
    for (const auto& t : res.per_n)
      emit(json{{"command", "verify"}, {"record", "tally"}, {"class", cls_name}, {"n", t.n},
                {"sequences", t.sequences}, {"graphic", t.graphic}, {"positives", t.positives},
                {"agreements", t.agreements}, {"discrepancies", t.discrepancies}});
    for (const auto& p : res.positives) {
      json rec{{"command", "verify"}, {"record", "positive"}, {"class", cls_name},
               {"n", p.verdict.n}, {"sequence", p.seq.render()},
               {"family", to_string(p.verdict.family)}};
      if (p.verdict.params)
        rec["params"] = {(*p.verdict.params)[0], (*p.verdict.params)[1], (*p.verdict.params)[2]};
      emit(rec);
    }
    for (const auto& dd : res.discrepancies) {
      json rec{{"command", "verify"},
               {"record", "discrepancy"},
               {"class", cls_name},
               {"n", static_cast<int>(dd.seq.size())},
               {"sequence", dd.seq.render()},
               {"classifier", dd.result.classifier.decision},
               {"classifier_reason", dd.result.classifier.reason},
               {"oracle", to_string(dd.result.oracle.outcome)},
               {"oracle_reason", dd.result.oracle.reason}};
      if (dd.result.oracle.counterexample)
        rec["counterexample"] = to_edge_list(*dd.result.oracle.counterexample);
      emit(rec);
    }
    emit(json{{"command", "verify"}, {"record", "summary"}, {"class", cls_name}, {"max_n", max_n},
              {"positives", res.positives.size()},
              {"discrepancies", res.discrepancies.size()}});
  }
  if (!out_dir.empty() && !res.discrepancies.empty()) {
    std::ostringstream lines;
    for (const auto& dd : res.discrepancies)
      lines << json{{"class", cls_name}, {"sequence", dd.seq.render()},
                    {"classifier", dd.result.classifier.decision},
                    {"oracle", to_string(dd.result.oracle.outcome)}}
                   .dump()
            << "\n";
    write_file(ensure_out_dir(out_dir) / "verify_discrepancies.jsonl", lines.str());
  }
  return res.discrepancies.empty() ? 0 : 2;
}

int cmd_witness(const std::string& text, int limit, bool human, const std::string& out_dir) {
  const DegreeSequence d = parse_sequence(text);
  const WitnessResult w = disconnected_witness(d, limit);
  if (w.graph && !out_dir.empty())
    write_file(ensure_out_dir(out_dir) / "witness.edgelist", to_edge_list(*w.graph));
  if (human) {
    switch (w.outcome) {
      case WitnessOutcome::found:
        std::cout << d.render() << ": disconnected realization via " << w.method << " ("
                  << w.components << " components)\n"
                  << to_edge_list(*w.graph);
        break;
      case WitnessOutcome::none:
        std::cout << d.render() << ": every realization is connected\n";
        break;
      case WitnessOutcome::undecided:
        std::cout << d.render() << ": undecided, exceeds enumeration limit " << limit << "\n";
        break;
    }
  } else {
    json rec{{"command", "witness"}, {"record", "witness"}, {"input", text},
             {"sequence", d.render()}, {"outcome", to_string(w.outcome)}, {"method", w.method},
             {"components", w.components}};
    if (w.graph) rec["edge_list"] = to_edge_list(*w.graph);
    emit(rec);
  }
  switch (w.outcome) {
    case WitnessOutcome::found: return 0;
    case WitnessOutcome::none: return 2;
    case WitnessOutcome::undecided: return 3;
  }
  return 3;
}

int cmd_transform(const std::string& path, const std::string& op, const std::string& remove_s,
                  const std::string& add_s, bool human, const std::string& out_dir) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Graph g = from_edge_list(buffer.str());
  Graph result(0);
  if (op == "switch") {
    if (remove_s.empty() || add_s.empty())
      throw std::invalid_argument("op switch requires --remove and --add");
    result = apply_switch(g, {parse_edge_pairs(remove_s), parse_edge_pairs(add_s)});
  } else if (op == "girth3") {
    auto reduced = girth_reduce_to_3(g);
    if (!reduced) throw std::invalid_argument("girth reduction not applicable");
    result = *reduced;
  } else {
    const BicyclicCore core = bicyclic_core(g);
    if (op == "sandglass-theta")
      result = sandglass_to_theta(g, core);
    else if (op == "bowtie-norm")
      result = bowtie_normalize(g, core);
    else
      result = theta_normalize(g, core);
  }
  const std::string edges = to_edge_list(result);
  if (!out_dir.empty()) write_file(ensure_out_dir(out_dir) / "transform.edgelist", edges);
  json core_info;
  if ((op == "sandglass-theta" || op == "bowtie-norm" || op == "theta-norm") &&
      structural_class(result) == StructuralClass::bicyclic) {
    const BicyclicCore after = bicyclic_core(result);
    core_info = json{{"kind", to_string(after.kind)}, {"r", after.r}, {"s", after.s},
                     {"t", after.t}};
  }
  if (human) {
    std::cout << edges;
    if (!core_info.is_null())
      std::cout << "core: " << core_info["kind"].get<std::string>() << " r=" << core_info["r"]
                << " s=" << core_info["s"] << " t=" << core_info["t"] << "\n";
    if (op == "girth3") std::cout << "girth: " << girth(result) << "\n";
    return 0;
  }
  json rec{{"command", "transform"}, {"record", "graph"}, {"op", op}, {"input", path},
           {"n", result.vertex_count()}, {"m", result.edge_count()}, {"edge_list", edges}};
  if (!core_info.is_null()) rec["core"] = core_info;
  if (op == "girth3") rec["girth"] = girth(result);
  emit(rec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forcibly tree/unicyclic/bicyclic degree-sequence toolkit"};
  app.require_subcommand(1);

  int limit = kDefaultEnumerationLimit;
  int workers = 4;
  bool human = false;
  std::string out_dir;
  app.add_option("--limit", limit, "enumeration vertex cap")->capture_default_str();
  app.add_option("--workers", workers, "parallel workers for verify")->capture_default_str();
  app.add_flag("--human", human, "human-readable output instead of JSON records");
  app.add_option("--out", out_dir, "directory for auxiliary output files");

  std::string classify_text, classify_class = "auto";
  auto* c_classify =
      app.add_subcommand("classify", "decide forcibly tree/unicyclic/bicyclic membership");
  c_classify->fallthrough();
  c_classify->add_option("sequence", classify_text, "degree sequence, e.g. \"4,2^6\"")->required();
  c_classify->add_option("--class", classify_class, "target class")
      ->check(CLI::IsMember({"tree", "unicyclic", "bicyclic", "auto"}))
      ->capture_default_str();

  std::string realize_text;
  auto* c_realize = app.add_subcommand("realize", "greedy realization as an edge list");
  c_realize->fallthrough();
  c_realize->add_option("sequence", realize_text, "degree sequence")->required();

  std::string enum_text, enum_mode = "labeled", enum_emit = "count";
  auto* c_enumerate = app.add_subcommand("enumerate", "enumerate realizations");
  c_enumerate->fallthrough();
  c_enumerate->add_option("sequence", enum_text, "degree sequence")->required();
  c_enumerate->add_option("--mode", enum_mode, "labeled or noniso")
      ->check(CLI::IsMember({"labeled", "noniso"}))
      ->capture_default_str();
  c_enumerate->add_option("--emit", enum_emit, "count or edgelist")
      ->check(CLI::IsMember({"count", "edgelist"}))
      ->capture_default_str();

  std::string verify_class;
  int verify_max_n = 9;
  auto* c_verify =
      app.add_subcommand("verify", "sweep all degree sequences, cross-check classifier vs oracle");
  c_verify->fallthrough();
  c_verify->add_option("--class", verify_class, "tree, unicyclic, or bicyclic")
      ->check(CLI::IsMember({"tree", "unicyclic", "bicyclic"}))
      ->required();
  c_verify->add_option("--max-n", verify_max_n, "largest sequence length")->capture_default_str();

  std::string witness_text;
  auto* c_witness = app.add_subcommand("witness", "find a disconnected realization");
  c_witness->fallthrough();
  c_witness->add_option("sequence", witness_text, "degree sequence")->required();

  std::string transform_path, transform_op, transform_remove, transform_add;
  auto* c_transform = app.add_subcommand("transform", "apply a degree-preserving rewrite");
  c_transform->fallthrough();
  c_transform->add_option("graph", transform_path, "edge-list file")->required();
  c_transform->add_option("--op", transform_op, "rewrite to apply")
      ->check(CLI::IsMember({"sandglass-theta", "bowtie-norm", "theta-norm", "girth3", "switch"}))
      ->required();
  c_transform->add_option("--remove", transform_remove, "edges to delete, e.g. 0-1,3-4");
  c_transform->add_option("--add", transform_add, "edges to insert, e.g. 0-3,1-4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  int code = 1;
  try {
    if (c_classify->parsed())
      code = cmd_classify(classify_text, classify_class, human);
    else if (c_realize->parsed())
      code = cmd_realize(realize_text, human, out_dir);
    else if (c_enumerate->parsed())
      code = cmd_enumerate(enum_text, enum_mode, enum_emit, limit, human);
    else if (c_verify->parsed())
      code = cmd_verify(verify_class, verify_max_n, workers, limit, human, out_dir);
    else if (c_witness->parsed())
      code = cmd_witness(witness_text, limit, human, out_dir);
    else if (c_transform->parsed())
      code = cmd_transform(transform_path, transform_op, transform_remove, transform_add, human,
                           out_dir);
  } catch (const std::exception& e) {
    emit_error(name, e.what(), human);
    code = 1;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cerr << json{{"record", "timing"}, {"command", name}, {"elapsed_ms", elapsed.count()}}.dump()
            << "\n";
  return code;
}

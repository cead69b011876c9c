#include "alignrepair/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "alignrepair/conflicts.hpp"
#include "alignrepair/error.hpp"
#include "alignrepair/evaluation.hpp"
#include "alignrepair/generator.hpp"
#include "alignrepair/io.hpp"
#include "alignrepair/merged_graph.hpp"
#include "alignrepair/modularization.hpp"
#include "alignrepair/repair.hpp"
#include "alignrepair/report.hpp"

namespace alignrepair {

namespace {

struct Inputs {
  std::string onto1, onto2, align;
};

struct Loaded {
  Ontology first, second;
  Alignment alignment;
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--onto1", in.onto1, "first ontology file")->required();
  cmd->add_option("--onto2", in.onto2, "second ontology file")->required();
  cmd->add_option("--align", in.align, "alignment TSV file")->required();
}

Loaded load(const Inputs& in) {
  return {parse_ontology_file(read_file(in.onto1), Side::first),
          parse_ontology_file(read_file(in.onto2), Side::second),
          parse_alignment_tsv(read_file(in.align))};
}

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detect and repair disjointness incoherence in ontology alignments", "alignrepair"};
  app.require_subcommand(1);

  Inputs repair_in, check_in, frag_in, conf_in;
  RepairConfig config;
  bool no_clusters = false;
  bool timings = false;
  std::string repair_out, repair_report;
  auto* repair_cmd = app.add_subcommand("repair", "repair an alignment");
  add_inputs(repair_cmd, repair_in);
  repair_cmd->add_option("--epsilon", config.epsilon, "confidence interval; negative disables filtering");
  repair_cmd->add_option("--search-depth", config.search_depth, "lookahead depth for ties")
      ->check(CLI::NonNegativeNumber);
  repair_cmd->add_flag("--no-clusters", no_clusters, "do not split conflicts into clusters");
  repair_cmd->add_option("--out", repair_out, "repaired alignment TSV")->required();
  repair_cmd->add_option("--report", repair_report, "JSON run report");
  repair_cmd->add_flag("--timings", timings, "include wall-clock timings in the report");

  auto* check_cmd = app.add_subcommand("check", "count incoherent classes");
  add_inputs(check_cmd, check_in);

  auto* frag_cmd = app.add_subcommand("fragments", "core fragment and checkset statistics");
  add_inputs(frag_cmd, frag_in);

  bool list_sets = false;
  auto* conf_cmd = app.add_subcommand("conflicts", "conflict set and cluster statistics");
  add_inputs(conf_cmd, conf_in);
  conf_cmd->add_flag("--list", list_sets, "also list every conflict set");

  std::string produced_path, reference_path, input_path, eval_onto1, eval_onto2;
  auto* eval_cmd = app.add_subcommand("eval", "precision, recall and f-measure");
  eval_cmd->add_option("--produced", produced_path, "produced alignment TSV")->required();
  eval_cmd->add_option("--reference", reference_path, "reference alignment TSV")->required();
  eval_cmd->add_option("--input", input_path, "alignment before repair, to count removals");
  auto* eval_o1 = eval_cmd->add_option("--onto1", eval_onto1, "first ontology, to count incoherent classes");
  auto* eval_o2 = eval_cmd->add_option("--onto2", eval_onto2, "second ontology");
  eval_o1->needs(eval_o2);
  eval_o2->needs(eval_o1);

  GeneratorParams gen;
  std::string out_dir;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic instance");
  gen_cmd->add_option("--classes", gen.classes_per_side, "classes per ontology")->required();
  gen_cmd->add_option("--mappings", gen.mapping_count, "produced alignment size")->required();
  gen_cmd->add_option("--disjoints", gen.disjoint_pairs, "disjoint pairs per ontology")->required();
  gen_cmd->add_option("--noise", gen.noise_rate, "fraction of wrong mappings")->required();
  gen_cmd->add_option("--seed", gen.seed, "random seed")->required();
  gen_cmd->add_option("--depth", gen.max_depth, "maximum hierarchy depth");
  gen_cmd->add_option("--branching", gen.branching, "mean children per class");
  gen_cmd->add_option("--cross-links", gen.cross_link_rate, "extra parent link rate");
  gen_cmd->add_option("--out-dir", out_dir, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*repair_cmd) {
      config.use_clusters = !no_clusters;
      auto in = load(repair_in);
      Stopwatch clock;
      PhaseTimings t;
      auto fragments = extract_core_fragments(in.first, in.second, in.alignment);
      t.fragments_ms = clock.lap_ms();
      auto conflicts = find_conflict_sets(fragments, in.alignment);
      t.conflicts_ms = clock.lap_ms();
      auto result = repair(conflicts, in.alignment, config);
      t.repair_ms = clock.lap_ms();
      auto before = count_incoherent_classes(MergedGraph(in.first, in.second, in.alignment));
      auto after = count_incoherent_classes(MergedGraph(in.first, in.second, result.kept));
      t.verify_ms = clock.lap_ms();

      write_file(repair_out, write_alignment_tsv(result.kept));
      RunReport report;
      report.classes_first = in.first.size();
      report.classes_second = in.second.size();
      report.input_mappings = in.alignment.size();
      report.fragments = fragment_stats(fragments);
      report.conflicts = conflict_stats(conflicts);
      report.config = config;
      report.repair = result.stats;
      report.removed = result.removed.size();
      report.removed_filtered = static_cast<std::size_t>(
          std::count_if(result.removed.begin(), result.removed.end(),
                        [](const Removal& r) { return r.cause == RemovalCause::filtered; }));
      report.kept = result.kept.size();
      report.incoherent_before = before.count;
      report.incoherent_after = after.count;
      if (timings) report.timings = t;
      if (!repair_report.empty()) write_file(repair_report, to_json(report).dump(2) + "\n");
      out << "removed " << report.removed << " of " << report.input_mappings
          << " mappings; incoherent classes " << before.count << " -> " << after.count << "\n";
    } else if (*check_cmd) {
      auto in = load(check_in);
      auto result = count_incoherent_classes(MergedGraph(in.first, in.second, in.alignment));
      out << result.count << "\n";
      for (const auto& c : result.classes) out << c << "\n";
    } else if (*frag_cmd) {
      auto in = load(frag_in);
      auto fragments = extract_core_fragments(in.first, in.second, in.alignment);
      out << to_json(fragment_stats(fragments)).dump(2) << "\n";
    } else if (*conf_cmd) {
      auto in = load(conf_in);
      auto fragments = extract_core_fragments(in.first, in.second, in.alignment);
      auto conflicts = find_conflict_sets(fragments, in.alignment);
      auto j = to_json(conflict_stats(conflicts));
      if (list_sets) {
        auto sets = nlohmann::ordered_json::array();
        for (const auto& c : conflicts) {
          nlohmann::ordered_json entry;
          auto ms = nlohmann::ordered_json::array();
          for (auto m : c.mappings) ms.push_back(describe(in.alignment[m]));
          entry["mappings"] = ms;
          entry["witness"] = {{"class", c.witness.incoherent_class},
                              {"disjoint", {c.witness.disjoint_first, c.witness.disjoint_second}}};
          sets.push_back(entry);
        }
        j["sets"] = sets;
      }
      out << j.dump(2) << "\n";
    } else if (*eval_cmd) {
      auto produced = parse_alignment_tsv(read_file(produced_path));
      auto reference = parse_alignment_tsv(read_file(reference_path));
      auto report = precision_recall_fmeasure(produced, reference);
      if (!input_path.empty()) {
        auto input = parse_alignment_tsv(read_file(input_path));
        std::size_t removed = 0;
        for (const auto& m : input) {
          if (!produced.contains(m)) ++removed;
        }
        report.removed_count = removed;
      }
      if (!eval_onto1.empty()) {
        auto first = parse_ontology_file(read_file(eval_onto1), Side::first);
        auto second = parse_ontology_file(read_file(eval_onto2), Side::second);
        report.incoherent_count = exhaustive_incoherence(first, second, produced).size();
      }
      out << to_json(report).dump(2) << "\n";
    } else if (*gen_cmd) {
      auto instance = generate_instance(gen);
      std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / "onto1.txt", write_ontology_file(instance.first));
      write_file(dir / "onto2.txt", write_ontology_file(instance.second));
      write_file(dir / "alignment.tsv", write_alignment_tsv(instance.produced));
      write_file(dir / "reference.tsv", write_alignment_tsv(instance.reference));
      out << "wrote " << instance.first.size() << "+" << instance.second.size() << " classes, "
          << instance.produced.size() << " mappings to " << dir.string() << "\n";
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace alignrepair

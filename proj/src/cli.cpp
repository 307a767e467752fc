#include "taitcw/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "taitcw/corpus.hpp"
#include "taitcw/errors.hpp"
#include "taitcw/graph_io.hpp"
#include "taitcw/oracle.hpp"
#include "taitcw/random_maps.hpp"
#include "taitcw/slicer.hpp"
#include "taitcw/tft.hpp"
#include "taitcw/word_io.hpp"
#include "taitcw/word_problem.hpp"

namespace taitcw {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Battery {
  std::ostream& out;
  bool ok = true;

  void check(bool passed, const std::string& what) {
    out << (passed ? "ok   " : "FAIL ") << what << '\n';
    ok = ok && passed;
  }
};

bool verify_graph(const EmbeddedGraph& g, int seeds, unsigned threads, std::ostream& out) {
  Battery b{out};
  const auto report = validate(g);
  out << "genus " << report.genus << ", components " << report.component_count << ", faces "
      << report.faces.size() << '\n';
  std::size_t legs = g.legs_in().size() + g.legs_out().size();
  std::size_t face_total = 0;
  for (const auto& f : report.faces) face_total += f.size();
  b.check(face_total == 2 * g.edge_count(), "face walks cover every half-edge once");
  (void)legs;

  OracleOptions oracle_options;
  oracle_options.threads = threads;
  const auto colorings = enumerate_colorings(g, oracle_options);
  out << "oracle colorings " << colorings.size() << '\n';
  const bool bridged = !find_bridges(g).empty();
  if (g.is_closed() && bridged) b.check(colorings.empty(), "bridge forces zero colorings");

  if (report.genus != 0 || report.component_count != 1) {
    out << "skipping slice checks (needs a connected genus-0 map)\n";
    return b.ok;
  }
  const std::string code = canonical_code(g);
  std::vector<MorphismWord> words;
  for (int s = 0; s < seeds; ++s) {
    words.push_back(reslice_distinct(g, static_cast<std::uint64_t>(s)));
    b.check(canonical_code(recompose(words.back())) == code, "seed " + std::to_string(s) + " recomposes to the input");
  }
  if (g.is_closed()) {
    for (std::size_t s = 0; s < words.size(); ++s) {
      const Count value = evaluate_closed(words[s]);
      b.check(value == Count(colorings.size()), "seed " + std::to_string(s) + " count " + value.str() +
                                                    " matches the oracle");
    }
    bool sections = true, faces = true;
    for (const auto& col : colorings) {
      for (const K4Element& p : cross_section_products(g, col, words.front())) sections = sections && p.is_identity();
      try {
        const auto fc = tait_face_coloring(g, col);
        for (const auto& [x, y] : g.edges()) {
          faces = faces && fc[report.face_of[static_cast<std::size_t>(x)]] != fc[report.face_of[static_cast<std::size_t>(y)]];
        }
      } catch (const InconsistentHolonomy&) {
        faces = false;
      }
    }
    b.check(sections, "every cross-section product is the identity");
    b.check(faces, "every coloring gives a proper face coloring");
  } else {
    const CountMatrix oracle = count_matrix_oracle(g, oracle_options);
    for (std::size_t s = 0; s < words.size(); ++s)
      b.check(evaluate_matrix(words[s], threads) == oracle, "seed " + std::to_string(s) + " matrix matches the oracle");
  }
  return b.ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tait coloring counts by slicing planar trivalent maps into cobordism layers"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string graph_file, word_file, pres_file, w1_text, w2_text, input_colors;
  std::uint64_t seed = 0;
  bool seed_given = false, list = false, stats = false;
  std::size_t coloring_index = 0, depth = 6, maxlen = 0, vertices = 50, samples = 5, oracle_limit = 16;
  int seeds = 5;
  std::uint64_t rng_seed = 0;

  auto* count = app.add_subcommand("count", "Count Tait colorings by slicing and evaluation");
  count->add_option("graph", graph_file)->required();
  count->add_option("--seed", seed, "Use the seeded sweep instead of the width-minimizing one")
      ->each([&](const std::string&) { seed_given = true; });
  count->add_flag("--stats", stats, "Report peak width and state support on stderr");

  auto* oracle = app.add_subcommand("oracle", "Count or list colorings by brute force");
  oracle->add_option("graph", graph_file)->required();
  oracle->add_flag("--list", list, "Print every coloring");

  auto* slice_cmd = app.add_subcommand("slice", "Print the generator word of a graph");
  slice_cmd->add_option("graph", graph_file)->required();
  slice_cmd->add_option("--seed", seed);

  auto* eval = app.add_subcommand("eval-word", "Evaluate a word on the unit or a basis state");
  eval->add_option("word", word_file)->required();
  eval->add_option("--input", input_colors, "Input basis colors for words with input strands");

  auto* matrix = app.add_subcommand("matrix", "Print the count matrix of a word");
  matrix->add_option("word", word_file)->required();

  auto* faces = app.add_subcommand("faces", "Face 4-coloring from one oracle coloring");
  faces->add_option("graph", graph_file)->required();
  faces->add_option("--coloring", coloring_index)->required();

  auto* word_eq = app.add_subcommand("word-eq", "Decide equality of two words where possible");
  auto* cobord = app.add_subcommand("cobord", "Search for a rewriting certificate");
  for (auto* sub : {word_eq, cobord}) {
    sub->add_option("presentation", pres_file)->required();
    sub->add_option("w1", w1_text)->required();
    sub->add_option("w2", w2_text)->required();
    sub->add_option("--depth", depth);
    sub->add_option("--maxlen", maxlen, "Word length cap (default: 4x the longest input)");
  }

  auto* verify = app.add_subcommand("verify", "Run the invariant battery on one graph");
  verify->add_option("graph", graph_file)->required();
  verify->add_option("--seeds", seeds)->check(CLI::Range(1, 1000));

  auto* bench = app.add_subcommand("bench", "Time random genus-0 maps");
  bench->add_option("--vertices", vertices)->check(CLI::Range(2, 100000));
  bench->add_option("--samples", samples);
  bench->add_option("--rng-seed", rng_seed);
  bench->add_option("--oracle-limit", oracle_limit, "Largest vertex count cross-checked by the oracle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  const unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;

  try {
    if (count->parsed()) {
      const auto g = read_graph_file(graph_file);
      const MorphismWord w = seed_given ? reslice_distinct(g, seed) : slice_min_width(g);
      EvalStats s;
      out << evaluate_closed(w, &s) << '\n';
      if (stats) err << "peak_width " << s.peak_width << "\npeak_support " << s.peak_support << '\n';
    } else if (oracle->parsed()) {
      OracleOptions options;
      options.threads = workers;
      const auto colorings = enumerate_colorings(read_graph_file(graph_file), options);
      if (list) {
        for (const auto& col : colorings) out << format_coloring(col) << '\n';
      } else {
        out << colorings.size() << '\n';
      }
    } else if (slice_cmd->parsed()) {
      out << serialize_word(reslice_distinct(read_graph_file(graph_file), seed)) << '\n';
    } else if (eval->parsed()) {
      const auto w = read_word_file(word_file);
      StateVector input = StateVector::unit();
      if (!input_colors.empty() || w.input_width > 0) input = StateVector::basis(input_colors);
      const StateVector result = evaluate_state(w, input);
      if (result.width() == 0) {
        out << (result.is_zero() ? Count(0) : result.terms().front().second) << '\n';
      } else {
        out << result.serialize();
      }
    } else if (matrix->parsed()) {
      out << evaluate_matrix(read_word_file(word_file), workers).serialize();
    } else if (faces->parsed()) {
      const auto g = read_graph_file(graph_file);
      const auto colorings = enumerate_colorings(g);
      if (coloring_index >= colorings.size()) {
        throw UnknownName("no coloring " + std::to_string(coloring_index) + "; the graph has " +
                          std::to_string(colorings.size()));
      }
      out << format_face_coloring(tait_face_coloring(g, colorings[coloring_index])) << '\n';
    } else if (word_eq->parsed() || cobord->parsed()) {
      const auto p = GroupPresentation::parse(read_text(pres_file));
      const Word w1 = p.parse_word(w1_text), w2 = p.parse_word(w2_text);
      const std::size_t cap = maxlen ? maxlen : default_max_length(p, w1, w2);
      const auto cert = bounded_cobordism_search(p, w1, w2, depth, cap);
      if (word_eq->parsed()) {
        if (cert) {
          out << "equal\n" << format_certificate(p, *cert);
        } else if (p.is_klein_four() && !words_equal_k4(w1, w2)) {
          out << "unequal\n";
        } else {
          out << "unknown\n";
        }
      } else {
        out << (cert ? format_certificate(p, *cert) : "none\n");
      }
    } else if (verify->parsed()) {
      if (!verify_graph(read_graph_file(graph_file), seeds, workers, out)) {
        err << "VerificationFailed: at least one check failed\n";
        return 1;
      }
    } else if (bench->parsed()) {
      if (vertices % 2 != 0) throw CLI::ValidationError("--vertices", "must be even");
      bool agree = true;
      for (std::size_t i = 0; i < samples; ++i) {
        const auto g = random_planar_map(vertices, rng_seed + i);
        const auto start = std::chrono::steady_clock::now();
        const MorphismWord w = slice_min_width(g);
        EvalStats s;
        const Count value = evaluate_closed(w, &s);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << "sample " << i << " vertices " << vertices << " count " << value << " peak_width " << s.peak_width
            << " peak_support " << s.peak_support;
        if (vertices <= oracle_limit) {
          const bool same = Count(enumerate_colorings(g).size()) == value;
          agree = agree && same;
          out << " oracle " << (same ? "agrees" : "DISAGREES");
        }
        out << '\n';
        err << "sample " << i << " seconds " << seconds << '\n';
      }
      if (!agree) {
        err << "VerificationFailed: oracle disagreement\n";
        return 1;
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace taitcw

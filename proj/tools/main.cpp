// Command-line front end: genes, combinatorial weights, Serre-weight sets,
// coherent-triple sampling, Kisin-variety presentations, and JSONL batches.
//
// Exit codes: 0 success, 2 usage or parse failure, 3 sampler exhausted,
// 4 unsupported parameter.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gw/basep.hpp"
#include "gw/errors.hpp"
#include "gw/gene.hpp"
#include "gw/kisin.hpp"
#include "gw/serre.hpp"
#include "gw/triple.hpp"
#include "gw/weights.hpp"

namespace {

using json = nlohmann::ordered_json;
using gw::cpp_int;
using gw::Gene;
using gw::Letter;

cpp_int parse_big(const std::string& text, const std::string& what) {
  std::size_t k = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) k = 1;
  if (k == text.size())
    throw std::invalid_argument(what + ": expected a decimal integer, got \"" +
                                text + "\"");
  for (std::size_t i = k; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument(what + ": expected a decimal integer, got \"" +
                                  text + "\"");
  return cpp_int(text);
}

// JSON numbers above 2^53 would lose digits in double-based consumers, so
// anything larger goes out as a decimal string.
json big_to_json(const cpp_int& v) {
  static const cpp_int lim = cpp_int(1) << 53;
  if (v >= 0 && v < lim) return json(v.convert_to<std::uint64_t>());
  if (v < 0 && -v < lim) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

std::string join_letters(const std::vector<Letter>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += gw::to_string(xs[i]);
  }
  return out;
}

std::vector<Letter> top_row(const Gene& g) {
  return {g.x.begin(), g.x.begin() + g.f};
}
std::vector<Letter> bottom_row(const Gene& g) {
  return {g.x.begin() + g.f, g.x.end()};
}

// Per-column dominant letters; "-" everywhere when dominance is circular.
std::vector<std::string> dominance_markers(const Gene& g) {
  std::vector<std::string> out;
  try {
    for (Letter d : gw::dominant_letters(g)) out.push_back(gw::to_string(d));
  } catch (const gw::CircularDominance&) {
    out.assign(g.f, "-");
  }
  return out;
}

json gene_to_json(const Gene& g) {
  json j;
  j["f"] = g.f;
  json top = json::array(), bottom = json::array();
  for (Letter x : top_row(g)) top.push_back(gw::to_string(x));
  for (Letter x : bottom_row(g)) bottom.push_back(gw::to_string(x));
  j["top"] = std::move(top);
  j["bottom"] = std::move(bottom);
  j["viable"] = gw::is_viable(g);
  j["degenerate"] = gw::is_degenerate(g);
  return j;
}

std::string weight_line(const gw::CombinatorialWeight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(static_cast<int>(w[i]));
  }
  out += ")";
  return out;
}

struct TripleArgs {
  std::uint32_t p = 0;
  std::uint32_t f = 0;
  std::string h, gamma, gamma_prime;

  bool any() const {
    return p != 0 || f != 0 || !h.empty() || !gamma.empty() ||
           !gamma_prime.empty();
  }
};

void add_triple_options(CLI::App* cmd, TripleArgs& a) {
  cmd->set_help_flag("--help", "print this help and exit");
  cmd->add_option("-p,--p", a.p, "the prime p");
  cmd->add_option("-f,--f", a.f, "the degree f of the unramified extension");
  cmd->add_option("--h", a.h, "representation parameter h (decimal)");
  cmd->add_option("--gamma", a.gamma, "type parameter gamma (decimal)");
  cmd->add_option("--gamma-prime", a.gamma_prime,
                  "type parameter gamma' (decimal)");
}

void require_args(const TripleArgs& a, bool need_h, bool need_type) {
  if (a.p == 0 || a.f == 0)
    throw std::invalid_argument("missing -p and/or -f");
  if (need_h && a.h.empty()) throw std::invalid_argument("missing --h");
  if (need_type && (a.gamma.empty() || a.gamma_prime.empty()))
    throw std::invalid_argument("missing --gamma and/or --gamma-prime");
}

// Builds the triple, noting canonical reductions of out-of-range inputs.
gw::CoherentTriple triple_from(const TripleArgs& a) {
  require_args(a, true, true);
  const cpp_int h = parse_big(a.h, "--h");
  const cpp_int gamma = parse_big(a.gamma, "--gamma");
  const cpp_int gamma_prime = parse_big(a.gamma_prime, "--gamma-prime");
  const gw::CoherentTriple t =
      gw::make_triple(a.p, a.f, h, gamma, gamma_prime);
  const auto note = [](const char* name, const cpp_int& in, const cpp_int& out) {
    if (in != out)
      std::cerr << "note: " << name << " reduced canonically to " << out
                << "\n";
  };
  note("h", h, gw::to_int(t.h));
  note("gamma", gamma, gw::to_int(t.gamma));
  note("gamma-prime", gamma_prime, gw::to_int(t.gamma_prime));
  return t;
}

int run_gene(const TripleArgs& args, bool as_json, bool dominance) {
  const Gene g = gw::gene_of_triple(triple_from(args));
  if (as_json) {
    json j = gene_to_json(g);
    if (dominance) j["dominant"] = dominance_markers(g);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << join_letters(top_row(g)) << "\n"
            << join_letters(bottom_row(g)) << "\n";
  if (dominance) {
    const auto marks = dominance_markers(g);
    std::string line;
    for (std::size_t i = 0; i < marks.size(); ++i) {
      if (i) line += ",";
      line += marks[i];
    }
    std::cout << line << "\n";
  }
  return 0;
}

Gene gene_from_spec_or_triple(const std::string& spec, const TripleArgs& args) {
  if (!spec.empty() && args.any())
    throw std::invalid_argument(
        "give either a gene text argument or triple options, not both");
  if (!spec.empty()) return gw::parse_gene(spec);
  return gw::gene_of_triple(triple_from(args));
}

int run_weights(const std::string& spec, const TripleArgs& args,
                bool count_only, std::uint64_t limit) {
  const Gene g = gene_from_spec_or_triple(spec, args);
  if (count_only) {
    std::cout << gw::count_weights(g).str() << "\n";
    return 0;
  }
  if (limit > 0) {
    std::uint64_t left = limit;
    gw::visit_gene_weights(g, [&](const gw::CombinatorialWeight& w) {
      std::cout << weight_line(w) << "\n";
      return --left > 0;
    });
    return 0;
  }
  for (const auto& w : gw::gene_weights(g)) std::cout << weight_line(w) << "\n";
  return 0;
}

int run_serre(const std::string& mode, const TripleArgs& args,
              bool count_only) {
  std::vector<gw::SerreWeight> ws;
  if (mode == "rhobar") {
    require_args(args, true, false);
    ws = gw::weights_of_rep(args.p, args.f, parse_big(args.h, "--h"));
  } else if (mode == "type") {
    require_args(args, false, true);
    ws = gw::weights_of_type(args.p, args.f, parse_big(args.gamma, "--gamma"),
                             parse_big(args.gamma_prime, "--gamma-prime"));
  } else {  // common: the per-weight recipe, not the double enumeration
    ws = gw::common_weights_fast(triple_from(args));
  }
  if (count_only) {
    std::cout << ws.size() << "\n";
    return 0;
  }
  for (const auto& w : ws) std::cout << gw::to_string(w) << "\n";
  return 0;
}

int run_sample(const std::string& spec, std::uint32_t p, std::uint64_t seed,
               std::uint32_t retries) {
  const Gene g = gw::parse_gene(spec);
  std::mt19937_64 rng(seed);
  for (std::uint32_t k = 0; k < retries; ++k) {
    const auto t = gw::sample_triple(g, p, rng);
    if (!t) continue;
    json j;
    j["p"] = t->p;
    j["f"] = t->f;
    j["h"] = big_to_json(gw::to_int(t->h));
    j["gamma"] = big_to_json(gw::to_int(t->gamma));
    j["gamma_prime"] = big_to_json(gw::to_int(t->gamma_prime));
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cerr << "error: sampler exhausted after " << retries << " draws\n";
  return 3;
}

gw::Fragment fragment_from_spec(const std::string& inner) {
  std::string clean;
  for (char c : inner)
    if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
  const auto slash = clean.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("fragment spec needs a top/bottom slash");
  const auto split = [](const std::string& row) {
    std::vector<Letter> out;
    std::stringstream ss(row);
    std::string item;
    while (std::getline(ss, item, ','))
      out.push_back(gw::letter_from_string(item));
    return out;
  };
  gw::Fragment fr;
  fr.anchor = 0;
  fr.top = split(clean.substr(0, slash));
  fr.bottom = split(clean.substr(slash + 1));
  if (fr.top.empty() || fr.top.size() != fr.bottom.size())
    throw std::invalid_argument("fragment rows must be nonempty and equal");
  return fr;
}

// The point cut out on one projective line by the vanishing coordinate.
std::string pinned_point(bool top_zero) {
  return top_zero ? "{[0:1]}" : "{[1:0]}";
}

int run_kisin(const std::string& spec, const TripleArgs& args) {
  if (!spec.empty() && spec.front() == '[' && spec.back() == ']') {
    const gw::Fragment fr = fragment_from_spec(spec.substr(1, spec.size() - 2));
    std::cout << gw::render_presentation(gw::presentation_of_fragment(fr));
    const gw::ReductionResult res = gw::reduce(fr);
    const std::string pt = pinned_point(!res.swapped);
    std::string note = "variety: ";
    if (res.n > 0) note += pt + "^" + std::to_string(res.n) + " × ";
    if (res.reduced.size() == 1 && res.reduced.bottom[0] != Letter::AB)
      note += pt;
    else
      note += "GR([" + join_letters(res.reduced.top) + "/" +
              join_letters(res.reduced.bottom) + "])";
    std::cout << note << "\n";
    return 0;
  }
  const Gene g = gene_from_spec_or_triple(spec, args);
  std::cout << gw::render_presentation(gw::presentation_of_gene(g));
  return 0;
}

cpp_int big_from_json(const json& v, std::uint32_t p, const std::string& what) {
  if (v.is_number_unsigned()) return cpp_int(v.get<std::uint64_t>());
  if (v.is_number_integer()) return cpp_int(v.get<std::int64_t>());
  if (v.is_string()) return parse_big(v.get<std::string>(), what);
  if (v.is_array()) {
    cpp_int out = 0;
    for (const auto& d : v) {
      if (!d.is_number_integer() && !d.is_number_unsigned())
        throw std::invalid_argument(what + ": digit array must hold integers");
      const std::int64_t digit = d.get<std::int64_t>();
      if (digit < 0 || digit >= static_cast<std::int64_t>(p))
        throw std::invalid_argument(what + ": digit out of range for base " +
                                    std::to_string(p));
      out = out * p + digit;
    }
    return out;
  }
  throw std::invalid_argument(what +
                              ": expected an integer, decimal string, or "
                              "digit array");
}

json process_batch_line(const std::string& line, std::uint64_t lineno) {
  try {
    const json in = json::parse(line);
    const std::uint32_t p = in.at("p").get<std::uint32_t>();
    const std::uint32_t f = in.at("f").get<std::uint32_t>();
    const cpp_int h = big_from_json(in.at("h"), p, "h");
    const cpp_int gamma = big_from_json(in.at("gamma"), p, "gamma");
    const cpp_int gamma_prime = big_from_json(in.at("gamma_prime"), p,
                                              "gamma_prime");
    const std::string request = in.at("request").get<std::string>();
    const gw::CoherentTriple t = gw::make_triple(p, f, h, gamma, gamma_prime);
    const Gene g = gw::gene_of_triple(t);
    json out;
    if (request == "gene") {
      out["gene"] = gene_to_json(g);
    } else if (request == "count") {
      out["count"] = big_to_json(gw::count_weights(g));
    } else if (request == "weights") {
      json ws = json::array();
      for (const auto& w : gw::gene_weights(g)) {
        json tuple = json::array();
        for (auto bit : w) tuple.push_back(static_cast<int>(bit));
        ws.push_back(std::move(tuple));
      }
      out["weights"] = std::move(ws);
    } else if (request == "common") {
      json cs = json::array();
      for (const auto& w : gw::common_weights_fast(t))
        cs.push_back(gw::to_string(w));
      out["common"] = std::move(cs);
    } else if (request == "kisin") {
      json lines = json::array();
      std::stringstream ss(gw::render_presentation(gw::presentation_of_gene(g)));
      std::string text_line;
      while (std::getline(ss, text_line)) lines.push_back(text_line);
      out["kisin"] = std::move(lines);
    } else {
      throw std::invalid_argument("unknown request \"" + request + "\"");
    }
    return out;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    err["line"] = lineno;
    return err;
  }
}

int run_batch(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open " << path << "\n";
      return 2;
    }
    in = &file;
  }
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::cout << process_batch_line(line, lineno).dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Genes, combinatorial weights, Serre-weight sets, and Kisin-variety "
      "presentations for two-dimensional mod-p parameters"};
  app.require_subcommand(1);

  TripleArgs gene_args;
  bool gene_json_flag = false, gene_dominance = false;
  CLI::App* cmd_gene =
      app.add_subcommand("gene", "Compute and render the gene of a triple");
  add_triple_options(cmd_gene, gene_args);
  cmd_gene->add_flag("--json", gene_json_flag, "emit a JSON object");
  cmd_gene->add_flag("--text", "emit the two-row text form (default)");
  cmd_gene->add_flag("--dominance", gene_dominance,
                     "add per-column dominant-letter markers");

  TripleArgs weight_args;
  std::string weight_spec;
  bool weight_count_only = false;
  std::uint64_t weight_limit = 0;
  CLI::App* cmd_weights = app.add_subcommand(
      "weights", "Enumerate or count the combinatorial weights of a gene");
  cmd_weights->add_option("spec", weight_spec,
                          "gene text \"top/bottom\" (alternative to a triple)");
  add_triple_options(cmd_weights, weight_args);
  CLI::Option* wc = cmd_weights->add_flag("--count-only", weight_count_only,
                                          "print only the exact count");
  cmd_weights->add_option("--limit", weight_limit,
                          "stream only the first N weights")
      ->excludes(wc);

  TripleArgs serre_args;
  std::string serre_mode;
  bool serre_count_only = false;
  CLI::App* cmd_serre = app.add_subcommand(
      "serre", "Serre-weight sets of a representation, a type, or both");
  cmd_serre
      ->add_option("mode", serre_mode,
                   "rhobar (needs p,f,h), type (needs p,f,gamma,gamma'), or "
                   "common (needs the full triple)")
      ->required()
      ->check(CLI::IsMember({"rhobar", "type", "common"}));
  add_triple_options(cmd_serre, serre_args);
  cmd_serre->add_flag("--count-only", serre_count_only,
                      "print only the cardinality");

  std::string sample_spec;
  std::uint32_t sample_p = 0;
  std::uint64_t sample_seed = 0;
  std::uint32_t sample_retries = 64;
  CLI::App* cmd_sample = app.add_subcommand(
      "sample", "Draw a coherent triple exhibiting the given gene");
  cmd_sample->add_option("spec", sample_spec, "gene text \"top/bottom\"")
      ->required();
  cmd_sample->add_option("-p,--p", sample_p, "the prime p (>= 5)")->required();
  cmd_sample->add_option("--seed", sample_seed, "RNG seed (default 0)");
  cmd_sample->add_option("--retries", sample_retries,
                         "draws before giving up (default 64)");

  TripleArgs kisin_args;
  std::string kisin_spec;
  CLI::App* cmd_kisin = app.add_subcommand(
      "kisin",
      "Presentation of the Kisin variety of a gene or [top/bottom] fragment");
  cmd_kisin->add_option(
      "spec", kisin_spec,
      "gene text \"top/bottom\", or a fragment in brackets \"[top/bottom]\"");
  add_triple_options(cmd_kisin, kisin_args);

  std::string batch_path;
  CLI::App* cmd_batch = app.add_subcommand(
      "batch", "Process JSONL records {p,f,h,gamma,gamma_prime,request}");
  cmd_batch->add_option("path", batch_path, "input file, or - for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_gene->parsed())
      return run_gene(gene_args, gene_json_flag, gene_dominance);
    if (cmd_weights->parsed())
      return run_weights(weight_spec, weight_args, weight_count_only,
                         weight_limit);
    if (cmd_serre->parsed())
      return run_serre(serre_mode, serre_args, serre_count_only);
    if (cmd_sample->parsed())
      return run_sample(sample_spec, sample_p, sample_seed, sample_retries);
    if (cmd_kisin->parsed()) return run_kisin(kisin_spec, kisin_args);
    if (cmd_batch->parsed()) return run_batch(batch_path);
  } catch (const gw::UnsupportedPrime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

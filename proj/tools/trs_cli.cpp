// trs_cli.cpp
//
// Command-line front end: parameter reporting, hex-stream encode/decode,
// the seeded Monte Carlo simulator with CSV output, and the brute-force
// verification suites.
//
// Exit codes: 0 success, 1 usage/configuration/input error,
// 2 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trs/trs.hpp"

namespace {

struct TripleOptions {
  unsigned m = 8;
  std::size_t n = 128;
  std::size_t ka = 98;
  std::size_t kb = 82;
  std::size_t kz = 36;
  std::string alpha;      // empty: field generator
  std::string prim_poly;  // empty: built-in default for m
};

// Accepts decimal, 0x hex and 0b binary (bit masks read naturally in all
// three).
std::uint64_t parse_uint(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    unsigned long long value = 0;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
      value = std::stoull(text.substr(2), &used, 2);
      used += 2;
    } else {
      value = std::stoull(text, &used, 0);
    }
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + ": not a number: " + text);
  }
}

void add_triple_options(CLI::App* cmd, TripleOptions& opts) {
  cmd->add_option("--m", opts.m, "field extension degree (GF(2^m))")
      ->required();
  cmd->add_option("--n", opts.n, "component code length")->required();
  cmd->add_option("--ka", opts.ka, "dimension of the outer code C_a")
      ->required();
  cmd->add_option("--kb", opts.kb, "dimension of the middle code C_b")
      ->required();
  cmd->add_option("--kz", opts.kz, "dimension of the inner code C_z")
      ->required();
  cmd->add_option("--alpha", opts.alpha,
                  "mixing parameter (default: field generator)");
  cmd->add_option("--prim-poly", opts.prim_poly,
                  "primitive polynomial bit mask (default: built-in)");
}

trs::NestedTriple make_triple(const TripleOptions& opts) {
  const std::uint32_t poly =
      opts.prim_poly.empty()
          ? trs::Field::default_prim_poly(opts.m)
          : static_cast<std::uint32_t>(
                parse_uint(opts.prim_poly, "--prim-poly"));
  auto field = std::make_shared<const trs::Field>(opts.m, poly);
  std::optional<trs::Symbol> alpha;
  if (!opts.alpha.empty()) {
    alpha = static_cast<trs::Symbol>(parse_uint(opts.alpha, "--alpha"));
  }
  return trs::NestedTriple(field, opts.n, opts.ka, opts.kb, opts.kz, alpha);
}

int run_params(const TripleOptions& opts) {
  const trs::NestedTriple triple = make_triple(opts);
  const trs::CodeParams p = triple.params();
  std::cout << "gf(2^" << triple.field().m() << ") n=" << triple.n()
            << " alpha=" << triple.alpha() << "\n";
  std::cout << "(n0,k0,d0) = (" << p.n0 << "," << p.k0 << "," << p.d0 << ")\n";
  std::cout << "(d_a,d_b,d_z) = (" << triple.code_a().d() << ","
            << triple.code_b().d() << "," << triple.code_z().d() << ")\n";
  return 0;
}

int run_encode(const TripleOptions& opts, const std::string& in_path,
               const std::string& out_path) {
  const trs::NestedTriple triple = make_triple(opts);
  std::ifstream in_file;
  if (!in_path.empty()) {
    in_file.open(in_path);
    if (!in_file) {
      std::cerr << "error: cannot open " << in_path << "\n";
      return 1;
    }
  }
  std::istream& in = in_path.empty() ? std::cin : in_file;

  const std::uint32_t q = triple.field().q();
  trs::MessageTriple msg;
  msg.a = trs::read_symbols(in, triple.code_a().k(), q);
  msg.b = trs::read_symbols(in, triple.code_b().k(), q);
  msg.z = trs::read_symbols(in, triple.code_z().k(), q);
  const trs::Word codeword = triple.encode(msg);

  std::ofstream out_file;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 1;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : out_file;
  out << trs::format_symbols(codeword) << "\n";
  return 0;
}

int run_decode(const TripleOptions& opts, const std::string& in_path) {
  const trs::NestedTriple triple = make_triple(opts);
  std::ifstream in_file;
  if (!in_path.empty()) {
    in_file.open(in_path);
    if (!in_file) {
      std::cerr << "error: cannot open " << in_path << "\n";
      return 1;
    }
  }
  std::istream& in = in_path.empty() ? std::cin : in_file;
  const trs::Word received =
      trs::read_symbols(in, triple.n0(), triple.field().q());

  const trs::CascadeOutcome out = trs::cascade_decode(
      triple, std::span<const trs::Symbol>(received));

  std::cout << "status: " << trs::to_string(out.status) << "\n";
  std::cout << "e_locs:";
  for (std::size_t pos : out.trace.e_locs) std::cout << ' ' << pos;
  std::cout << "\n";
  std::cout << "candidates: " << out.trace.candidates.size() << "\n";
  if (out.ok()) {
    const trs::CascadeCandidate& chosen =
        out.trace.candidates[*out.trace.chosen];
    std::cout << "chosen_stream: " << chosen.stream << "\n";
    std::cout << "tau_min: " << out.trace.tau_min << "\n";
    trs::Word message = out.message.a;
    message.insert(message.end(), out.message.b.begin(), out.message.b.end());
    message.insert(message.end(), out.message.z.begin(), out.message.z.end());
    std::cout << "message: " << trs::format_symbols(message) << "\n";
    std::cout << "codeword: " << trs::format_symbols(out.codeword) << "\n";
  }
  return 0;
}

struct SweepSpec {
  bool active = false;
  double lo = 0, hi = 0, step = 1;
};

SweepSpec parse_sweep(const std::string& text) {
  SweepSpec sweep;
  if (text.empty()) return sweep;
  std::istringstream is(text);
  std::string lo, hi, step;
  if (!std::getline(is, lo, ':') || !std::getline(is, hi, ':') ||
      !std::getline(is, step) || is.rdbuf()->in_avail() > 0) {
    throw CLI::ValidationError("--sweep expects LO:HI:STEP, got " + text);
  }
  try {
    sweep.lo = std::stod(lo);
    sweep.hi = std::stod(hi);
    sweep.step = std::stod(step);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--sweep expects numbers, got " + text);
  }
  if (sweep.step <= 0 || sweep.hi < sweep.lo) {
    throw CLI::ValidationError("--sweep needs LO <= HI and STEP > 0");
  }
  sweep.active = true;
  return sweep;
}

trs::ChannelModel parse_model(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string kind = text.substr(0, colon);
    const std::string param = text.substr(colon + 1);
    try {
      if (kind == "fixed") {
        return trs::ChannelModel::fixed_weight(std::stoul(param));
      }
      if (kind == "qsc") {
        return trs::ChannelModel::q_symmetric(std::stod(param));
      }
    } catch (const CLI::Error&) {
      throw;
    } catch (const std::exception&) {
      // falls through to the shared error below
    }
  }
  throw CLI::ValidationError(
      "--model expects fixed:TAU or qsc:P, got " + text);
}

int run_simulate(const TripleOptions& opts, const std::string& model_text,
                 std::uint64_t trials, std::uint64_t seed,
                 const std::string& out_path, const std::string& sweep_text) {
  const trs::NestedTriple triple = make_triple(opts);
  const trs::ChannelModel base = parse_model(model_text);
  const SweepSpec sweep = parse_sweep(sweep_text);

  std::vector<trs::ChannelModel> points;
  if (!sweep.active) {
    points.push_back(base);
  } else if (base.kind == trs::ChannelModel::Kind::FixedWeight) {
    for (double v = sweep.lo; v <= sweep.hi + 1e-9; v += sweep.step) {
      points.push_back(
          trs::ChannelModel::fixed_weight(static_cast<std::size_t>(v + 0.5)));
    }
  } else {
    for (double v = sweep.lo; v <= sweep.hi + 1e-12; v += sweep.step) {
      points.push_back(trs::ChannelModel::q_symmetric(v));
    }
  }

  std::vector<trs::SimRecord> records;
  records.reserve(points.size());
  for (const trs::ChannelModel& model : points) {
    records.push_back(trs::run_simulation(triple, model, trials, seed));
    const trs::SimRecord& rec = records.back();
    std::cerr << "  " << trs::csv_row(rec)
              << "  (" << rec.mean_decode_seconds * 1e6 << " us/frame)\n";
  }

  if (out_path.empty()) {
    trs::write_csv(std::cout, records);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 1;
    }
    trs::write_csv(out, records);
  }
  return 0;
}

// Exhaustive checks at toy scale: enumerated minimum distances match the
// designed min{3d_a, 2d_b, d_z}, and the cascade agrees with brute-force
// nearest-codeword decoding on every weight<=1 pattern.
int run_verify(bool tiny) {
  auto field = std::make_shared<const trs::Field>(2);
  struct Instance {
    std::size_t n, ka, kb, kz;
  };
  std::vector<Instance> instances{{3, 2, 1, 1}};
  if (!tiny) {
    instances.push_back({3, 1, 1, 1});
    instances.push_back({4, 2, 2, 1});
  }

  bool all_ok = true;
  for (const Instance& inst : instances) {
    const trs::NestedTriple triple(field, inst.n, inst.ka, inst.kb, inst.kz);
    const trs::TinyCodeTable table = trs::enumerate_codewords(triple);
    const trs::CodeParams params = triple.params();
    const bool ok = table.min_distance == params.d0;
    std::cout << "min-distance n=" << inst.n << " (" << inst.ka << ","
              << inst.kb << "," << inst.kz << "): enumerated "
              << table.min_distance << ", designed " << params.d0 << " -> "
              << (ok ? "ok" : "MISMATCH") << "\n";
    all_ok = all_ok && ok;
  }

  // Oracle equivalence on the smallest instance.
  const trs::NestedTriple triple(field, 3, 2, 1, 1);
  const trs::TinyCodeTable table = trs::enumerate_codewords(triple);
  std::uint64_t checked = 0, mismatches = 0;
  for (const trs::Word& cw : table.codewords) {
    for (std::size_t pos = 0; pos <= cw.size(); ++pos) {
      for (trs::Symbol delta = (pos == cw.size() ? 0 : 1); delta < 4;
           ++delta) {
        trs::Word r = cw;
        if (pos < cw.size()) r[pos] ^= delta;
        const trs::CascadeOutcome out =
            trs::cascade_decode(triple, std::span<const trs::Symbol>(r));
        const trs::NearestResult ml = trs::nearest_codeword(table, r);
        ++checked;
        if (!out.ok() || out.codeword != table.codewords[ml.index]) {
          ++mismatches;
        }
        if (pos == cw.size()) break;  // the error-free pattern, once
      }
    }
  }
  std::cout << "oracle-equivalence: " << checked << " patterns, "
            << mismatches << " mismatches -> "
            << (mismatches == 0 ? "ok" : "MISMATCH") << "\n";
  all_ok = all_ok && (mismatches == 0);

  std::cout << (all_ok ? "verify: ok" : "verify: FAILED") << "\n";
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tripled Reed-Solomon code toolbox"};
  app.require_subcommand(1);

  TripleOptions opts;
  std::string in_path, out_path, model_text, sweep_text;
  std::uint64_t trials = 1000, seed = 1;
  bool tiny = false;

  CLI::App* params = app.add_subcommand("params", "print code parameters");
  add_triple_options(params, opts);

  CLI::App* encode =
      app.add_subcommand("encode", "encode hex message symbols from stdin");
  add_triple_options(encode, opts);
  encode->add_option("--in", in_path, "read symbols from a file");
  encode->add_option("--out", out_path, "write symbols to a file");

  CLI::App* decode =
      app.add_subcommand("decode", "decode hex received symbols from stdin");
  add_triple_options(decode, opts);
  decode->add_option("--in", in_path, "read symbols from a file");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo frame error rate");
  add_triple_options(simulate, opts);
  simulate->add_option("--model", model_text, "fixed:TAU or qsc:P")
      ->required();
  simulate->add_option("--trials", trials, "trials per sweep point")
      ->required();
  simulate->add_option("--seed", seed, "RNG seed")->required();
  simulate->add_option("--out", out_path, "CSV output file (default stdout)");
  simulate->add_option("--sweep", sweep_text,
                       "LO:HI:STEP sweep over the model parameter");

  CLI::App* verify =
      app.add_subcommand("verify", "brute-force verification suites");
  verify->add_flag("--tiny", tiny, "only the smallest instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (params->parsed()) return run_params(opts);
    if (encode->parsed()) return run_encode(opts, in_path, out_path);
    if (decode->parsed()) return run_decode(opts, in_path);
    if (simulate->parsed()) {
      return run_simulate(opts, model_text, trials, seed, out_path,
                          sweep_text);
    }
    if (verify->parsed()) return run_verify(tiny);
  } catch (const trs::HexParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

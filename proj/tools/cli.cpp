#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "permdex/permdex.hpp"

namespace permdex::cli {
namespace {

namespace fs = std::filesystem;
using Bytes = std::vector<std::uint8_t>;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string fmt_g(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

Bytes read_input(const std::string& path, Streams& io) {
  if (path == "-") {
    return Bytes(std::istreambuf_iterator<char>(io.in),
                 std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw FormatError(path + ": cannot open for reading");
  return Bytes(std::istreambuf_iterator<char>(file),
               std::istreambuf_iterator<char>());
}

// Writes through a sibling temporary and renames it into place, so a
// failed command never leaves a partial output file.
void write_output(const std::string& path, std::span<const std::uint8_t> bytes,
                  Streams& io) {
  if (path == "-") {
    io.out.write(reinterpret_cast<const char*>(bytes.data()),
                 static_cast<std::streamsize>(bytes.size()));
    io.out.flush();
    return;
  }
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw FormatError(path + ": cannot open for writing");
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file.flush()) {
      file.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw FormatError(path + ": write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw FormatError(path + ": cannot move output into place");
  }
}

void write_text(const std::string& path, const std::string& text, Streams& io) {
  write_output(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()},
               io);
}

std::vector<Element> parse_values(const std::string& list, const char* flag) {
  std::vector<Element> values;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw UsageError(std::string(flag) + ": empty value in '" + list + "'");
    }
    token = token.substr(first, last - first + 1);
    std::uint64_t v = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || end != token.data() + token.size() ||
        v > max_value(32)) {
      throw UsageError(std::string(flag) + ": '" + token +
                       "' is not an unsigned 32-bit integer");
    }
    values.push_back(static_cast<Element>(v));
  }
  return values;
}

std::string join(std::span<const Element> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

Passkey load_key(const std::string& path, Streams& io) {
  const Bytes bytes = read_input(path, io);
  try {
    return parse_passkey(bytes);
  } catch (const KeyFormatError& e) {
    throw KeyFormatError(path + ": " + e.what());
  }
}

FormatTag resolve_format(const std::optional<std::string>& flag,
                         std::span<const std::uint8_t> bytes) {
  return flag ? parse_format_tag(*flag) : detect_format(bytes);
}

// ---- subcommands ------------------------------------------------------------

struct KeygenArgs {
  std::optional<std::string> secret;
  bool random = false;
  std::optional<std::uint64_t> seed;
  std::size_t cc = 0;
  unsigned width = 8;
  std::string ordering = "reverse-lex";
  std::uint64_t filler = 0;
  std::string output;
  bool verbose = false;
};

int cmd_keygen(const KeygenArgs& a, Streams& io) {
  const Ordering ordering = parse_ordering(a.ordering);
  check_column_constant(a.cc);
  check_width(a.width);
  if (a.filler > max_value(a.width)) {
    throw ConstraintError("filler " + std::to_string(a.filler) +
                          " does not fit in " + std::to_string(a.width) + " bits");
  }
  if (a.secret.has_value() == a.random) {
    throw UsageError("keygen needs exactly one of --secret or --random");
  }
  if (a.seed && !a.random) throw UsageError("--seed only applies to --random");
  if (a.output.empty()) throw UsageError("keygen needs -o FILE ('-' for stdout)");
  const auto filler = static_cast<Element>(a.filler);

  Passkey key;
  if (a.secret) {
    key = derive_passkey(*a.secret, a.cc, a.width, ordering, filler);
  } else {
    std::uint64_t seed = 0;
    if (a.seed) {
      seed = *a.seed;
    } else {
      std::random_device rd;
      seed = (std::uint64_t{rd()} << 32) | rd();
    }
    SplitMix64 rng(seed);
    key.ordering = ordering;
    key.column_constant = a.cc;
    key.width = a.width;
    key.filler = filler;
    key.placement_seed = rng.next();
    key.shuffle_seed = rng.next();
    validate(key);
  }

  write_output(a.output, serialize_passkey(key), io);
  if (a.verbose) {
    std::ostream& info = a.output == "-" ? io.err : io.out;
    char buf[96];
    std::snprintf(buf, sizeof buf, "placement_seed 0x%016llx\nshuffle_seed   0x%016llx\n",
                  static_cast<unsigned long long>(key.placement_seed),
                  static_cast<unsigned long long>(key.shuffle_seed));
    info << buf;
  }
  return kSuccess;
}

struct CodecArgs {
  std::string key;
  std::string input;
  std::string output;
  std::optional<std::string> format;
};

int cmd_encode(const CodecArgs& a, Streams& io) {
  const Passkey key = load_key(a.key, io);
  const Bytes bytes = read_input(a.input, io);
  const FormatTag tag = resolve_format(a.format, bytes);
  const Matrix m = read_matrix(bytes, tag, key.width, a.input);
  write_output(a.output, write_matrix(encode(m, key), tag), io);
  return kSuccess;
}

int cmd_decode(const CodecArgs& a, Streams& io) {
  const Passkey key = load_key(a.key, io);
  const Bytes bytes = read_input(a.input, io);
  const FormatTag tag = resolve_format(a.format, bytes);
  const Matrix compound = read_matrix(bytes, tag, key.width, a.input);
  write_output(a.output, write_matrix(decode(compound, key), tag), io);
  return kSuccess;
}

struct RankArgs {
  std::string values;
  std::uint64_t index = 0;
  std::string ordering = "reverse-lex";
};

int cmd_rank(const RankArgs& a, Streams& io) {
  const auto row = parse_values(a.values, "--row");
  const Ordering ordering = parse_ordering(a.ordering);
  io.out << rank(row, ordering).value << '\n';
  return kSuccess;
}

int cmd_unrank(const RankArgs& a, Streams& io) {
  const SortedMultiset ms(parse_values(a.values, "--multiset"));
  const Ordering ordering = parse_ordering(a.ordering);
  io.out << join(unrank(ms, RankIndex{a.index}, ordering)) << '\n';
  return kSuccess;
}

struct AnalysisArgs {
  std::string input;
  std::string output = "-";
  std::size_t cc = 0;
  std::optional<unsigned> width;
  std::string ordering = "reverse-lex";
  std::optional<std::string> format;
};

int cmd_indices(const AnalysisArgs& a, Streams& io) {
  const Ordering ordering = parse_ordering(a.ordering);
  const Bytes bytes = read_input(a.input, io);
  const Matrix m = read_matrix(bytes, resolve_format(a.format, bytes), {}, a.input);
  std::string text;
  const auto ranks = permutation_indices(m, a.cc, ordering);
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    text += std::to_string(j + 1) + ',' + std::to_string(ranks[j].value) + '\n';
  }
  write_text(a.output, text, io);
  return kSuccess;
}

int cmd_stats(const AnalysisArgs& a, Streams& io) {
  const Bytes bytes = read_input(a.input, io);
  const Matrix m = read_matrix(bytes, resolve_format(a.format, bytes), {}, a.input);
  const GuessReport guess = guess_probability(m, a.cc);
  const ExpansionReport expansion =
      expansion_report(m.rows(), m.cols(), a.cc, a.width.value_or(m.width()));
  const GridGeometry& g = expansion.geometry;

  const auto [lo, hi] = std::minmax_element(guess.arrangement_counts.begin(),
                                            guess.arrangement_counts.end());
  std::ostringstream s;
  s << "matrix: " << m.rows() << "x" << m.cols() << ", " << m.width()
    << "-bit, x=" << a.cc << ", chunks=" << guess.arrangement_counts.size() << '\n';
  if (*lo == *hi) {
    s << "per-chunk p: " << fmt_g(1.0 / static_cast<double>(*lo), 4) << '\n';
  } else {
    s << "per-chunk p: min " << fmt_g(1.0 / static_cast<double>(*hi), 4)
      << ", max " << fmt_g(1.0 / static_cast<double>(*lo), 4) << '\n';
  }
  if (guess.probability) {
    s << "total p: " << fmt_g(*guess.probability, 6) << '\n';
  } else {
    s << "total p: underflow (below 1e-300)\n";
  }
  s << "log10 total p: " << fmt_g(guess.log10_probability, 8) << '\n';
  s << "O: " << g.index_count << '\n'
    << "c: " << g.cells_per_index << '\n'
    << "Mx: " << g.appended_rows << '\n'
    << "S: " << g.slot_count << '\n'
    << "overhead ratio: " << fmt_g(expansion.overhead_ratio, 6) << '\n';
  io.out << s.str();
  return kSuccess;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return kUsage;
    case ErrorKind::format:
    case ErrorKind::key_format: return kInputFormat;
    case ErrorKind::constraint: return kConstraint;
    case ErrorKind::decode: return kDecodeFailure;
  }
  return kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"permdex: hide and restore matrix chunk order with permutation indices"};
  app.name("permdex");
  app.require_subcommand(1);

  KeygenArgs keygen;
  auto* kg = app.add_subcommand("keygen", "Write a PDXK passkey file");
  kg->add_option("--secret", keygen.secret, "Derive seeds from this passphrase");
  kg->add_flag("--random", keygen.random, "Draw seeds at random");
  kg->add_option("--seed", keygen.seed, "Seed for --random (reproducible keys)");
  kg->add_option("--cc", keygen.cc, "Column constant x (2-9)")->required();
  kg->add_option("--width", keygen.width, "Element width in bits (8, 16, 32)");
  kg->add_option("--ordering", keygen.ordering, "reverse-lex or lex");
  kg->add_option("--filler", keygen.filler, "Value for unused index slots");
  kg->add_option("-o,--output", keygen.output, "Key file ('-' for stdout)");
  kg->add_flag("--verbose", keygen.verbose, "Print the derived seeds");

  CodecArgs enc_args;
  auto* enc = app.add_subcommand("encode", "Obscure a matrix into a compound");
  enc->add_option("-k,--key", enc_args.key, "PDXK key file")->required();
  enc->add_option("-i,--input", enc_args.input, "Input matrix ('-' for stdin)")->required();
  enc->add_option("-o,--output", enc_args.output, "Output compound ('-' for stdout)")->required();
  enc->add_option("--format", enc_args.format, "pdxm, csv or pgm (default: detect)");

  CodecArgs dec_args;
  auto* dec = app.add_subcommand("decode", "Restore a matrix from its compound");
  dec->add_option("-k,--key", dec_args.key, "PDXK key file")->required();
  dec->add_option("-i,--input", dec_args.input, "Compound matrix ('-' for stdin)")->required();
  dec->add_option("-o,--output", dec_args.output, "Restored matrix ('-' for stdout)")->required();
  dec->add_option("--format", dec_args.format, "pdxm, csv or pgm (default: detect)");

  RankArgs rank_args;
  auto* rk = app.add_subcommand("rank", "Permutation index of one chunk");
  rk->add_option("--row", rank_args.values, "Comma-separated values")->required();
  rk->add_option("--ordering", rank_args.ordering, "reverse-lex or lex");

  RankArgs unrank_args;
  auto* urk = app.add_subcommand("unrank", "Arrangement at a permutation index");
  urk->add_option("--multiset", unrank_args.values, "Comma-separated values")->required();
  urk->add_option("--index", unrank_args.index, "1-based permutation index")->required();
  urk->add_option("--ordering", unrank_args.ordering, "reverse-lex or lex");

  AnalysisArgs idx_args;
  auto* idx = app.add_subcommand("indices", "Rank of every chunk as chunk,rank CSV");
  idx->add_option("-i,--input", idx_args.input, "Input matrix ('-' for stdin)")->required();
  idx->add_option("--cc", idx_args.cc, "Column constant x (2-9)")->required();
  idx->add_option("--ordering", idx_args.ordering, "reverse-lex or lex");
  idx->add_option("-o,--output", idx_args.output, "CSV output (default stdout)");
  idx->add_option("--format", idx_args.format, "pdxm, csv or pgm (default: detect)");

  AnalysisArgs stats_args;
  auto* st = app.add_subcommand("stats", "Guessing probability and size overhead");
  st->add_option("-i,--input", stats_args.input, "Input matrix ('-' for stdin)")->required();
  st->add_option("--cc", stats_args.cc, "Column constant x (2-9)")->required();
  st->add_option("--width", stats_args.width, "Element width for the overhead report");
  st->add_option("--format", stats_args.format, "pdxm, csv or pgm (default: detect)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*kg) return cmd_keygen(keygen, io);
    if (*enc) return cmd_encode(enc_args, io);
    if (*dec) return cmd_decode(dec_args, io);
    if (*rk) return cmd_rank(rank_args, io);
    if (*urk) return cmd_unrank(unrank_args, io);
    if (*idx) return cmd_indices(idx_args, io);
    if (*st) return cmd_stats(stats_args, io);
  } catch (const Error& e) {
    err << "permdex: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "permdex: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace permdex::cli

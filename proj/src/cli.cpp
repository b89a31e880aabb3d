#include "dmc/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dmc/analysis.hpp"
#include "dmc/cipher.hpp"
#include "dmc/error.hpp"
#include "dmc/imageio.hpp"
#include "dmc/magic_square.hpp"
#include "dmc/reference_key.hpp"

namespace dmc::cli {

namespace {

struct CliConfig {
  std::string input;
  std::string output;
  std::string key;
  std::string seed_text;
  bool fingerprint = false;
  ParseMode mode = ParseMode::Strict;
  std::uint32_t order = 0;
  std::size_t sample_n = kDefaultCorrelationSamples;
  std::size_t trials = 10;

  // analyze / attack inputs
  std::string plain;
  std::string cipher;
  std::string csv;
  std::string known_plain;
  std::string known_cipher;
  std::string target;
  std::string truth;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path);
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

ReferenceKey load_key(const CliConfig& cfg) {
  const auto bytes = read_file(cfg.key);
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  return build_key(parse_fasta(text, cfg.mode, cfg.key));
}

void warn_degenerate(const ReferenceKey& key, std::ostream& err) {
  if (key.min_multiplicity() == 1) {
    err << "warning: some quad occurs only once in the key window; its substitution is one-to-one\n";
  }
}

RandomStream make_stream(const CliConfig& cfg, std::ostream& err) {
  if (!cfg.seed_text.empty()) return RandomStream(*parse_seed(cfg.seed_text));
  auto rng = RandomStream::from_entropy();
  err << "seed: " << hex64(rng.seed()) << '\n';
  return rng;
}

std::vector<std::uint16_t> narrow(std::span<const std::uint32_t> pointers) {
  return {pointers.begin(), pointers.end()};
}

int cmd_encrypt(const CliConfig& cfg, std::ostream&, std::ostream& err) {
  const auto image = read_pgm(read_file(cfg.input));
  check_cipher_dimensions(image.width, image.height);
  const auto key = load_key(cfg);
  warn_degenerate(key, err);
  auto rng = make_stream(cfg, err);
  const auto cipher = encrypt(image, key, rng, {.embed_fingerprint = cfg.fingerprint});
  write_file(cfg.output, serialize(cipher));
  return kExitOk;
}

int cmd_decrypt(const CliConfig& cfg, std::ostream&, std::ostream&) {
  const auto cipher = deserialize(read_file(cfg.input));
  const auto key = load_key(cfg);
  write_file(cfg.output, write_pgm(decrypt(cipher, key)));
  return kExitOk;
}

struct Metric {
  std::string name;
  std::string direction;
  double value;
};

int cmd_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto plain = read_pgm(read_file(cfg.plain));
  const auto cipher = deserialize(read_file(cfg.cipher));
  if (plain.width != cipher.width || plain.height != cipher.height) {
    throw DimensionError(cipher.width, cipher.height);
  }
  auto rng = make_stream(cfg, err);
  std::vector<Metric> metrics;

  metrics.push_back({"plain_histogram_chi_square", "", chi_square_uniform(histogram(plain.pixels))});
  metrics.push_back({"cipher_histogram_chi_square", "", chi_square_uniform(pointer_histogram(cipher.pointers))});

  const auto plain_cells = as_samples<std::uint8_t>(plain.pixels);
  const auto cipher_cells = as_samples<std::uint32_t>(cipher.pointers);
  for (auto dir : kAllDirections) {
    for (const auto& [label, cells] : {std::pair{"plain_correlation", &plain_cells},
                                       std::pair{"cipher_correlation", &cipher_cells}}) {
      std::string name = label;
      try {
        const auto report = adjacent_correlation(*cells, plain.width, plain.height, dir, cfg.sample_n, rng);
        metrics.push_back({name, std::string(to_string(dir)), report.r});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroVariance) throw;
        err << "note: " << name << " " << to_string(dir) << " undefined (" << e.what() << ")\n";
      }
    }
  }

  if (!cfg.key.empty()) {
    const auto key = load_key(cfg);
    metrics.push_back({"differential_change_rate", "", differential_sensitivity(plain, key, cfg.trials, rng)});
    metrics.push_back({"paired_seed_change_rate", "", paired_seed_sensitivity(plain, key, cfg.trials, rng)});
  }

  out << "image: " << plain.width << "x" << plain.height << ", correlation samples: " << cfg.sample_n << '\n';
  for (const auto& m : metrics) {
    out << "  " << std::left << std::setw(30) << m.name << std::setw(12) << m.direction << std::right
        << std::fixed << std::setprecision(6) << m.value << '\n';
  }

  if (!cfg.csv.empty()) {
    std::ostringstream csv;
    csv << "metric,direction,value\n" << std::setprecision(17);
    for (const auto& m : metrics) csv << m.name << ',' << m.direction << ',' << m.value << '\n';
    const auto text = csv.str();
    write_file(cfg.csv, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
  return kExitOk;
}

int cmd_attack(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const auto known_plain = read_pgm(read_file(cfg.known_plain));
  const auto known_cipher = deserialize(read_file(cfg.known_cipher));
  const auto target = deserialize(read_file(cfg.target));
  const auto truth = read_pgm(read_file(cfg.truth));

  const auto candidate =
      chosen_plaintext_attack(known_plain.pixels, narrow(known_cipher.pointers), narrow(target.pointers));
  const auto report = evaluate_attack(candidate, truth.pixels);
  out << "match fraction: " << std::fixed << std::setprecision(6) << report.match_fraction << '\n'
      << "verdict: " << (report.success ? "success" : "failure") << '\n';
  return kExitOk;
}

int cmd_magic(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const auto square = generate_doubly_even(cfg.order);
  out << square.to_string() << "magic constant: " << magic_constant(square.order()) << '\n';
  return kExitOk;
}

int cmd_keyinfo(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const auto bytes = read_file(cfg.key);
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  const auto seq = parse_fasta(text, cfg.mode, cfg.key);
  out << "length: " << seq.size() << '\n';
  if (seq.size() < kMinKeyLength) throw SequenceTooShortError(seq.size());

  const auto index = KmerIndex::build(seq.bases);
  std::size_t covered = 0;
  for (unsigned q = 0; q < 256; ++q) covered += index.multiplicity(static_cast<std::uint8_t>(q)) > 0;
  out << "fingerprint: " << hex64(key_fingerprint(seq)) << '\n'
      << "min_multiplicity: " << index.min_multiplicity() << '\n'
      << "coverage: " << covered << "/256 quads\n";
  if (covered < 256) {
    // build_key reports exactly which quads are missing.
    build_key(seq);
  }
  if (index.min_multiplicity() == 1) {
    out << "warning: some quad occurs only once in the key window; its substitution is one-to-one\n";
  }
  return kExitOk;
}

}  // namespace

std::optional<std::uint64_t> parse_seed(const std::string& text) {
  std::string_view digits = text;
  int base = 10;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Image cipher built on DNA digital coding, a key DNA sequence and magic-square scrambling", "dmc"};
  app.require_subcommand(1);

  const std::map<std::string, ParseMode> modes{{"strict", ParseMode::Strict}, {"sanitize", ParseMode::Sanitize}};
  auto seed_check = CLI::Validator(
      [](std::string& s) { return parse_seed(s) ? std::string{} : "seed must be decimal or 0x-hex: " + s; }, "SEED");
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "FASTA handling of non-ACGT symbols: strict rejects, sanitize drops")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->default_str("strict");
  };

  auto* enc = app.add_subcommand("encrypt", "Encrypt a PGM image into a DMC1 container");
  enc->add_option("--in", cfg.input, "Plaintext PGM (square, side a multiple of 4)")->required();
  enc->add_option("--key", cfg.key, "Key FASTA file")->required();
  enc->add_option("--out", cfg.output, "Output DMC1 file")->required();
  enc->add_option("--seed", cfg.seed_text, "PRNG seed (decimal or 0x-hex); default draws from OS entropy")
      ->check(seed_check);
  enc->add_flag("--fingerprint", cfg.fingerprint, "Embed the key fingerprint so decrypt can detect a wrong key");
  add_mode(enc);

  auto* dec = app.add_subcommand("decrypt", "Decrypt a DMC1 container back to PGM");
  dec->add_option("--in", cfg.input, "Input DMC1 file")->required();
  dec->add_option("--key", cfg.key, "Key FASTA file")->required();
  dec->add_option("--out", cfg.output, "Output PGM file")->required();
  add_mode(dec);

  auto* ana = app.add_subcommand("analyze", "Histogram, adjacent-pixel correlation and differential metrics");
  ana->add_option("--plain", cfg.plain, "Plaintext PGM")->required();
  ana->add_option("--cipher", cfg.cipher, "Its DMC1 ciphertext")->required();
  ana->add_option("--csv", cfg.csv, "Also write metrics as CSV (metric,direction,value)");
  ana->add_option("--sample-n", cfg.sample_n, "Adjacent pairs sampled per direction")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  ana->add_option("--seed", cfg.seed_text, "Sampling seed (decimal or 0x-hex); default draws from OS entropy")
      ->check(seed_check);
  ana->add_option("--key", cfg.key, "Key FASTA file; enables the differential sensitivity metrics");
  ana->add_option("--trials", cfg.trials, "Differential trials when --key is given")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  add_mode(ana);

  auto* att = app.add_subcommand("attack", "Run the XOR known-plaintext replay attack and score it");
  att->add_option("--known-plain", cfg.known_plain, "Known plaintext PGM")->required();
  att->add_option("--known-cipher", cfg.known_cipher, "DMC1 ciphertext of the known plaintext")->required();
  att->add_option("--target", cfg.target, "DMC1 ciphertext to attack")->required();
  att->add_option("--truth", cfg.truth, "True plaintext of the target, for scoring")->required();

  auto* mag = app.add_subcommand("magic", "Print the doubly-even magic square of the given order");
  mag->add_option("--order", cfg.order, "Order n (multiple of 4)")->required();

  auto* info = app.add_subcommand("keyinfo", "Report length, fingerprint, quad coverage and multiplicity of a key");
  info->add_option("--key", cfg.key, "Key FASTA file")->required();
  add_mode(info);

  std::vector<const char*> argv{"dmc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (enc->parsed()) return cmd_encrypt(cfg, out, err);
    if (dec->parsed()) return cmd_decrypt(cfg, out, err);
    if (ana->parsed()) return cmd_analyze(cfg, out, err);
    if (att->parsed()) return cmd_attack(cfg, out, err);
    if (mag->parsed()) return cmd_magic(cfg, out, err);
    if (info->parsed()) return cmd_keyinfo(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const IoError& e) {
    err << "error: IoError: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace dmc::cli

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rudraksh/analysis.hpp"
#include "rudraksh/codec.hpp"
#include "rudraksh/kat.hpp"
#include "rudraksh/kem.hpp"
#include "rudraksh/params.hpp"

namespace {

using namespace rudraksh;

std::string default_params() {
  const char* env = std::getenv("RUDRAKSH_PARAMS");
  return env != nullptr ? env : "poly64";
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

Bytes parse_hex_exact(const std::string& hex, std::size_t len, const char* what) {
  Bytes b = from_hex(hex);
  if (b.size() != len) {
    throw FormatError(std::string(what) + " must be " + std::to_string(len) +
                      " bytes (" + std::to_string(2 * len) + " hex digits)");
  }
  return b;
}

int cmd_keygen(const std::string& params, const std::string& out_pk,
               const std::string& out_sk, const std::string& seed_hex) {
  const ParamSet& ps = paramset(params);
  Bytes coins(48);
  if (!seed_hex.empty()) {
    coins = parse_hex_exact(seed_hex, 48, "--seed");
  } else {
    random_bytes(coins);
  }
  const KemKeyPair kp = kem_keygen(coins, ps);
  write_file(out_pk, serialize_pk(kp.pk, ps));
  write_file(out_sk, serialize_sk(kp.sk, ps));
  std::cout << "wrote " << out_pk << " (" << ps.pk_bytes << " bytes), " << out_sk
            << " (" << ps.sk_bytes << " bytes)\n";
  return 0;
}

int cmd_encaps(const std::string& params, const std::string& pk_path,
               const std::string& out_ct, const std::string& out_ss,
               const std::string& coins_hex) {
  const ParamSet& ps = paramset(params);
  const PkePublicKey pk = deserialize_pk(read_file(pk_path), ps);
  EncapsResult res;
  if (!coins_hex.empty()) {
    const Bytes coins = parse_hex_exact(coins_hex, 16, "--coins");
    Seed16 msg{};
    std::copy(coins.begin(), coins.end(), msg.begin());
    res = kem_encaps(pk, msg, ps);
  } else {
    res = kem_encaps_random(pk, ps);
  }
  write_file(out_ct, serialize_ct(res.ct, ps));
  write_file(out_ss, res.ss);
  std::cout << "wrote " << out_ct << " (" << ps.ct_bytes << " bytes), " << out_ss
            << " (" << res.ss.size() << " bytes)\n";
  return 0;
}

int cmd_decaps(const std::string& params, const std::string& sk_path,
               const std::string& ct_path, const std::string& out_ss) {
  const ParamSet& ps = paramset(params);
  const KemSecretKey sk = deserialize_sk(read_file(sk_path), ps);
  const PkeCiphertext ct = deserialize_ct(read_file(ct_path), ps);
  const SharedSecret ss = kem_decaps(sk, ct, ps);
  write_file(out_ss, ss);
  std::cout << "wrote " << out_ss << " (" << ss.size() << " bytes)\n";
  return 0;
}

int cmd_kat(const std::string& params, unsigned count, const std::string& out) {
  const ParamSet& ps = paramset(params);
  write_text(out, kat_generate(ps, count));
  std::cout << "wrote " << count << " records to " << out << "\n";
  return 0;
}

/** Names the first divergent field of a failing record for the error message. */
std::string first_divergent_field(const KatRecord& have, const ParamSet& ps) {
  const KatRecord want = kat_record(ps, have.count);
  if (have.seed != want.seed) return "seed";
  if (have.pk != want.pk) return "pk";
  if (have.sk != want.sk) return "sk";
  if (have.ct != want.ct) return "ct";
  if (have.ss != want.ss) return "ss";
  return "count";
}

int cmd_kat_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const KatFile file = kat_parse(in);
  const std::vector<unsigned> failing = kat_verify(file);
  if (failing.empty()) {
    std::cout << "ok: " << file.records.size() << " records verified ("
              << file.params << ")\n";
    return 0;
  }
  const ParamSet& ps = paramset(file.params);
  for (const KatRecord& rec : file.records) {
    if (rec.count == failing.front()) {
      std::cerr << "mismatch: count = " << rec.count << ", first divergent field: "
                << first_divergent_field(rec, ps) << "\n";
      break;
    }
  }
  std::cerr << failing.size() << " of " << file.records.size() << " records failed\n";
  return 1;
}

struct AnalysisRow {
  analysis::SchemeRow scheme;
  bool computed;            // failure recomputed here vs. echoed
  double computed_failure;  // valid when computed
};

std::vector<AnalysisRow> collect_rows(const std::vector<std::string>& names) {
  std::vector<AnalysisRow> rows;
  for (const analysis::SchemeRow& scheme : analysis::comparison_table()) {
    const bool wanted =
        names.empty() || std::find(names.begin(), names.end(), scheme.name) != names.end();
    if (!wanted) continue;
    AnalysisRow row{scheme, false, 0.0};
    const bool shipped =
        std::any_of(std::begin(kAllParamNames), std::end(kAllParamNames),
                    [&](ParamName n) { return to_string(n) == scheme.name; });
    if (shipped) {
      row.computed = true;
      row.computed_failure = analysis::failure_log2(paramset(scheme.name));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_failure(const AnalysisRow& row) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  if (row.computed) {
    os << row.computed_failure;
  } else {
    os << row.scheme.failure_log2 << "*";
  }
  return os.str();
}

int cmd_analyze(const std::string& params, bool all, bool csv) {
  std::vector<std::string> names;
  if (!all) names.push_back(std::string(to_string(paramset(params).name)));
  const std::vector<AnalysisRow> rows = collect_rows(all ? std::vector<std::string>{} : names);

  if (csv) {
    std::cout << "name,ell,n,q,eta,B,failure_log2,memory_bits,pk_bytes,sk_bytes,"
                 "ct_bytes,bit_sec_classical,bit_sec_quantum\n";
    for (const AnalysisRow& row : rows) {
      const analysis::SchemeRow& s = row.scheme;
      std::cout << s.name << "," << s.ell << "," << s.n << "," << s.q << "," << s.eta1
                << "," << s.B << "," << format_failure(row) << "," << s.memory_bits << ","
                << s.pk_bytes << "," << s.sk_bytes << "," << s.ct_bytes << ","
                << s.bit_sec_classical << "," << s.bit_sec_quantum << "\n";
    }
    return 0;
  }

  std::cout << "| name       | ell | n   | q     | eta | B | failure log2 | memory bits |"
               " pk   | sk   | ct   | sec C/Q   |\n";
  std::cout << "|------------|-----|-----|-------|-----|---|--------------|-------------|"
               "------|------|------|-----------|\n";
  for (const AnalysisRow& row : rows) {
    const analysis::SchemeRow& s = row.scheme;
    std::cout << "| " << std::left << std::setw(10) << s.name << std::right << " | "
              << std::setw(3) << s.ell << " | " << std::setw(3) << s.n << " | "
              << std::setw(5) << s.q << " | " << std::setw(3) << s.eta1 << " | " << s.B
              << " | " << std::setw(12) << format_failure(row) << " | " << std::setw(11)
              << s.memory_bits << " | " << std::setw(4) << s.pk_bytes << " | "
              << std::setw(4) << s.sk_bytes << " | " << std::setw(4) << s.ct_bytes
              << " | " << std::setw(3) << s.bit_sec_classical << "/" << std::setw(3)
              << s.bit_sec_quantum << " |\n";
  }
  std::cout << "\nfailure log2 is recomputed from the noise model; values marked * and\n"
               "the security columns are published estimates, not recomputed here.\n"
               "memory bits = (4 + ell) poly registers + 2 XOF states.\n";
  return 0;
}

double median_us(std::vector<double>& samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 == 1 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2.0;
}

int cmd_bench(const std::string& params, unsigned iters) {
  const ParamSet& ps = paramset(params);
  using clock = std::chrono::steady_clock;
  std::vector<double> t_keygen, t_encaps, t_decaps;
  t_keygen.reserve(iters);
  t_encaps.reserve(iters);
  t_decaps.reserve(iters);

  for (unsigned i = 0; i < iters; ++i) {
    auto t0 = clock::now();
    const KemKeyPair kp = kem_keygen_random(ps);
    auto t1 = clock::now();
    const EncapsResult enc = kem_encaps_random(kp.pk, ps);
    auto t2 = clock::now();
    const SharedSecret ss = kem_decaps(kp.sk, enc.ct, ps);
    auto t3 = clock::now();
    if (ss != enc.ss) throw std::runtime_error("shared secret mismatch during bench");
    t_keygen.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    t_encaps.push_back(std::chrono::duration<double, std::micro>(t2 - t1).count());
    t_decaps.push_back(std::chrono::duration<double, std::micro>(t3 - t2).count());
  }

  std::cout << std::fixed << std::setprecision(1);
  std::cout << to_string(ps.name) << ", " << iters << " iterations, median wall time:\n";
  std::cout << "  keygen  " << std::setw(9) << median_us(t_keygen) << " us\n";
  std::cout << "  encaps  " << std::setw(9) << median_us(t_encaps) << " us\n";
  std::cout << "  decaps  " << std::setw(9) << median_us(t_decaps) << " us\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rudraksh: lightweight MLWE key encapsulation"};
  app.require_subcommand(1);

  std::string params = default_params();
  std::string out_pk, out_sk, seed_hex;
  std::string pk_path, out_ct, out_ss, coins_hex;
  std::string sk_path, ct_path;
  std::string kat_out, kat_file;
  unsigned kat_count = 100;
  bool all_sets = false;
  bool csv = false;
  unsigned iters = 200;

  auto add_params = [&params](CLI::App* cmd) {
    cmd->add_option("--params", params, "parameter set (poly32, poly64, poly128)")
        ->capture_default_str();
  };

  CLI::App* keygen = app.add_subcommand("keygen", "generate a key pair");
  add_params(keygen);
  keygen->add_option("--out-pk", out_pk, "public key output path")->required();
  keygen->add_option("--out-sk", out_sk, "secret key output path")->required();
  keygen->add_option("--seed", seed_hex, "48-byte hex seed (default: OS randomness)");

  CLI::App* encaps = app.add_subcommand("encaps", "encapsulate a shared secret");
  add_params(encaps);
  encaps->add_option("--pk", pk_path, "public key input path")->required();
  encaps->add_option("--out-ct", out_ct, "ciphertext output path")->required();
  encaps->add_option("--out-ss", out_ss, "shared secret output path")->required();
  encaps->add_option("--coins", coins_hex, "16-byte hex coins (default: OS randomness)");

  CLI::App* decaps = app.add_subcommand("decaps", "decapsulate a shared secret");
  add_params(decaps);
  decaps->add_option("--sk", sk_path, "secret key input path")->required();
  decaps->add_option("--ct", ct_path, "ciphertext input path")->required();
  decaps->add_option("--out-ss", out_ss, "shared secret output path")->required();

  CLI::App* kat = app.add_subcommand("kat", "generate a known-answer .rsp file");
  add_params(kat);
  kat->add_option("--count", kat_count, "number of records")->capture_default_str();
  kat->add_option("--out", kat_out, "output path")->required();

  CLI::App* kat_verify = app.add_subcommand("kat-verify", "re-derive and check a .rsp file");
  kat_verify->add_option("--file", kat_file, "input path")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "failure probability and memory table");
  add_params(analyze);
  analyze->add_flag("--all", all_sets, "all parameter sets plus reference rows");
  analyze->add_flag("--csv", csv, "CSV instead of a Markdown table");

  CLI::App* bench = app.add_subcommand("bench", "median wall times for the KEM operations");
  add_params(bench);
  bench->add_option("--iters", iters, "iterations per operation")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (keygen->parsed()) return cmd_keygen(params, out_pk, out_sk, seed_hex);
    if (encaps->parsed()) return cmd_encaps(params, pk_path, out_ct, out_ss, coins_hex);
    if (decaps->parsed()) return cmd_decaps(params, sk_path, ct_path, out_ss);
    if (kat->parsed()) return cmd_kat(params, kat_count, kat_out);
    if (kat_verify->parsed()) return cmd_kat_verify(kat_file);
    if (analyze->parsed()) return cmd_analyze(params, all_sets, csv);
    if (bench->parsed()) return cmd_bench(params, iters);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

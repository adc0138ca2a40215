// symbetti command-line front end. Uses only the C interface.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "symbetti/symbetti.h"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitVerify = 2;
constexpr int kExitSizeCap = 3;
constexpr int kExitInternal = 4;

int exit_code(symbetti_status status) {
  switch (status) {
    case SYMBETTI_OK: return 0;
    case SYMBETTI_ERR_VERIFY_FAILED: return kExitVerify;
    case SYMBETTI_ERR_SIZE_CAP: return kExitSizeCap;
    case SYMBETTI_ERR_INTERNAL: return kExitInternal;
    default: return kExitInvalid;
  }
}

int report(symbetti_status status) {
  std::fprintf(stderr, "symbetti: %s: %s\n", symbetti_status_name(status),
               symbetti_last_error());
  return exit_code(status);
}

int print(char* text) {
  std::fputs(text, stdout);
  symbetti_string_free(text);
  return 0;
}

struct Common {
  std::string ideal_path;
  std::string format = "text";
  unsigned parallel = 0;
  std::optional<std::uint32_t> characteristic;

  symbetti_format fmt() const {
    return format == "json" ? SYMBETTI_FORMAT_JSON : SYMBETTI_FORMAT_TEXT;
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--ideal", common.ideal_path, "Ideal file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--parallel", common.parallel,
                  "Worker threads (0 = available cores)");
  cmd->add_option("--characteristic", common.characteristic,
                  "Override the field characteristic (0 or a prime)");
}

class IdealHandle {
 public:
  ~IdealHandle() { symbetti_ideal_free(ideal_); }
  symbetti_status load(const Common& common) {
    auto status = symbetti_ideal_from_file(common.ideal_path.c_str(), &ideal_);
    if (status != SYMBETTI_OK) return status;
    if (common.characteristic)
      status = symbetti_ideal_set_characteristic(ideal_, *common.characteristic);
    if (status != SYMBETTI_OK) return status;
    for (std::size_t k = 0; k < symbetti_ideal_warning_count(ideal_); ++k)
      std::fprintf(stderr, "warning: %s\n", symbetti_ideal_warning(ideal_, k));
    return SYMBETTI_OK;
  }
  const symbetti_ideal* get() const { return ideal_; }

 private:
  symbetti_ideal* ideal_ = nullptr;
};

int run_betti(const Common& common, int n, bool multigraded) {
  IdealHandle ideal;
  if (auto s = ideal.load(common); s != SYMBETTI_OK) return report(s);
  symbetti_betti* betti = nullptr;
  if (auto s = symbetti_betti_compute(ideal.get(), n, common.parallel, &betti); s != SYMBETTI_OK)
    return report(s);
  char* text = nullptr;
  const auto s = symbetti_betti_render(betti, common.fmt(), multigraded, &text);
  symbetti_betti_free(betti);
  return s == SYMBETTI_OK ? print(text) : report(s);
}

template <class F>
int run_stable(const Common& common, F&& render) {
  IdealHandle ideal;
  if (auto s = ideal.load(common); s != SYMBETTI_OK) return report(s);
  symbetti_stable* stable = nullptr;
  if (auto s = symbetti_stable_compute(ideal.get(), common.parallel, &stable); s != SYMBETTI_OK)
    return report(s);
  char* text = nullptr;
  const auto s = render(stable, &text);
  symbetti_stable_free(stable);
  return s == SYMBETTI_OK ? print(text) : report(s);
}

int run_verify(const Common& common, int max_n) {
  IdealHandle ideal;
  if (auto s = ideal.load(common); s != SYMBETTI_OK) return report(s);
  char* text = nullptr;
  const auto s = symbetti_verify(ideal.get(), max_n, common.fmt(), &text);
  if (text) print(text);
  return s == SYMBETTI_OK ? 0 : report(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables of symmetric monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", symbetti_version());

  Common common;
  int n = 0;
  std::int64_t big_n = 0;
  int max_n = 4;
  bool multigraded = false;

  auto* betti = app.add_subcommand("betti", "Betti table of I_n");
  add_common(betti, common);
  betti->add_option("--n", n, "Number of variables")->required()->check(CLI::Range(1, 64));
  betti->add_flag("--multigraded", multigraded, "List multigraded records");

  auto* extrapolate = app.add_subcommand("extrapolate", "Betti data of I_N from the stable levels");
  add_common(extrapolate, common);
  extrapolate->add_option("--n", big_n, "Number of variables")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));

  auto* segs = app.add_subcommand("segments", "Segment decomposition of the stable Betti table");
  add_common(segs, common);

  auto* asym = app.add_subcommand("asymptotics", "pd, reg and Cohen-Macaulay behaviour in n");
  add_common(asym, common);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  add_common(verify, common);
  verify->add_option("--max-n", max_n, "Largest level checked")->check(CLI::Range(1, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (*betti) return run_betti(common, n, multigraded);
  if (*extrapolate)
    return run_stable(common, [&](symbetti_stable* s, char** out) {
      return symbetti_stable_extrapolate(s, big_n, common.fmt(), out);
    });
  if (*segs)
    return run_stable(common, [&](symbetti_stable* s, char** out) {
      return symbetti_stable_segments(s, common.fmt(), out);
    });
  if (*asym)
    return run_stable(common, [&](symbetti_stable* s, char** out) {
      return symbetti_stable_asymptotics(s, common.fmt(), out);
    });
  return run_verify(common, max_n);
}

#include "symbetti/symbetti.h"

#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "symbetti/betti.hpp"
#include "symbetti/errors.hpp"
#include "symbetti/io.hpp"
#include "symbetti/stability.hpp"
#include "symbetti/verify.hpp"

struct symbetti_ideal {
  symbetti::ParsedIdeal parsed;
};

struct symbetti_betti {
  symbetti::BettiSet set;
};

struct symbetti_stable {
  symbetti::Stabilization data;
  unsigned threads = 0;
};

namespace {

thread_local std::string last_error;

symbetti_status status_of(symbetti::ErrorCode code) {
  switch (code) {
    case symbetti::ErrorCode::ParseError: return SYMBETTI_ERR_PARSE;
    case symbetti::ErrorCode::NotWeaklyDecreasing: return SYMBETTI_ERR_NOT_DECREASING;
    case symbetti::ErrorCode::NotPrime: return SYMBETTI_ERR_NOT_PRIME;
    case symbetti::ErrorCode::InvalidArgument: return SYMBETTI_ERR_INVALID_ARGUMENT;
    case symbetti::ErrorCode::SizeCapExceeded: return SYMBETTI_ERR_SIZE_CAP;
    case symbetti::ErrorCode::Undefined: return SYMBETTI_ERR_UNDEFINED;
  }
  return SYMBETTI_ERR_INTERNAL;
}

symbetti_status set_error(symbetti_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
symbetti_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const symbetti::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SYMBETTI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SYMBETTI_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

symbetti_status emit(const std::string& text, char** out) {
  *out = duplicate(text);
  return SYMBETTI_OK;
}

#define SYMBETTI_REQUIRE(cond)                                              \
  do {                                                                      \
    if (!(cond))                                                            \
      return set_error(SYMBETTI_ERR_INVALID_ARGUMENT, "null or invalid argument"); \
  } while (0)

symbetti::BettiOptions options_for(unsigned threads) {
  symbetti::BettiOptions options;
  options.threads = threads;
  return options;
}

}  // namespace

extern "C" {

SYMBETTI_API const char* symbetti_last_error(void) { return last_error.c_str(); }

SYMBETTI_API const char* symbetti_status_name(symbetti_status status) {
  switch (status) {
    case SYMBETTI_OK: return "ok";
    case SYMBETTI_ERR_PARSE: return "parse error";
    case SYMBETTI_ERR_NOT_DECREASING: return "not weakly decreasing";
    case SYMBETTI_ERR_NOT_PRIME: return "characteristic not prime";
    case SYMBETTI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SYMBETTI_ERR_SIZE_CAP: return "size cap exceeded";
    case SYMBETTI_ERR_UNDEFINED: return "undefined";
    case SYMBETTI_ERR_VERIFY_FAILED: return "verification failed";
    case SYMBETTI_ERR_IO: return "i/o error";
    case SYMBETTI_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

SYMBETTI_API void symbetti_string_free(char* text) { delete[] text; }

SYMBETTI_API const char* symbetti_version(void) { return "0.1.0"; }

SYMBETTI_API symbetti_status symbetti_ideal_from_json(const char* text,
                                                      symbetti_ideal** out) {
  SYMBETTI_REQUIRE(text && out);
  return guarded([&] {
    *out = new symbetti_ideal{symbetti::parse_ideal_text(text)};
    return SYMBETTI_OK;
  });
}

SYMBETTI_API symbetti_status symbetti_ideal_from_file(const char* path,
                                                      symbetti_ideal** out) {
  SYMBETTI_REQUIRE(path && out);
  return guarded([&] {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec))
      return set_error(SYMBETTI_ERR_IO, std::string("cannot read ") + path);
    *out = new symbetti_ideal{symbetti::parse_ideal_file(path)};
    return SYMBETTI_OK;
  });
}

SYMBETTI_API symbetti_status symbetti_ideal_from_partitions(
    const int* parts, const size_t* lengths, size_t count,
    uint32_t characteristic, symbetti_ideal** out) {
  SYMBETTI_REQUIRE(out && (count == 0 || (parts && lengths)));
  return guarded([&] {
    std::vector<symbetti::Partition> input;
    std::size_t offset = 0;
    for (std::size_t k = 0; k < count; ++k) {
      input.emplace_back(std::vector<int>(parts + offset, parts + offset + lengths[k]));
      offset += lengths[k];
    }
    symbetti::ParsedIdeal parsed;
    parsed.ideal = symbetti::SymmetricIdeal(input, symbetti::FieldSpec(characteristic));
    *out = new symbetti_ideal{std::move(parsed)};
    return SYMBETTI_OK;
  });
}

SYMBETTI_API void symbetti_ideal_free(symbetti_ideal* ideal) { delete ideal; }

SYMBETTI_API size_t symbetti_ideal_warning_count(const symbetti_ideal* ideal) {
  return ideal ? ideal->parsed.warnings.size() : 0;
}

SYMBETTI_API const char* symbetti_ideal_warning(const symbetti_ideal* ideal,
                                                size_t index) {
  if (!ideal || index >= ideal->parsed.warnings.size()) return nullptr;
  return ideal->parsed.warnings[index].c_str();
}

SYMBETTI_API size_t symbetti_ideal_generator_count(const symbetti_ideal* ideal) {
  return ideal ? ideal->parsed.ideal.generators().size() : 0;
}

SYMBETTI_API symbetti_status symbetti_ideal_generator(const symbetti_ideal* ideal,
                                                      size_t index, int* parts,
                                                      size_t capacity,
                                                      size_t* length) {
  SYMBETTI_REQUIRE(ideal && length);
  const auto& gens = ideal->parsed.ideal.generators();
  SYMBETTI_REQUIRE(index < gens.size());
  const auto& p = gens[index].parts();
  *length = p.size();
  for (std::size_t k = 0; k < p.size() && k < capacity && parts; ++k) parts[k] = p[k];
  return SYMBETTI_OK;
}

SYMBETTI_API symbetti_status symbetti_ideal_stats(const symbetti_ideal* ideal,
                                                  int* m, int* w, int* r) {
  SYMBETTI_REQUIRE(ideal);
  const auto& I = ideal->parsed.ideal;
  if (I.is_zero()) return set_error(SYMBETTI_ERR_UNDEFINED, "zero ideal");
  if (m) *m = *I.m();
  if (w) *w = *I.w();
  if (r) *r = *I.r();
  return SYMBETTI_OK;
}

SYMBETTI_API uint32_t symbetti_ideal_characteristic(const symbetti_ideal* ideal) {
  return ideal ? ideal->parsed.ideal.field().characteristic() : 0;
}

SYMBETTI_API symbetti_status symbetti_ideal_set_characteristic(
    symbetti_ideal* ideal, uint32_t characteristic) {
  SYMBETTI_REQUIRE(ideal);
  return guarded([&] {
    ideal->parsed.ideal =
        ideal->parsed.ideal.with_field(symbetti::FieldSpec(characteristic));
    return SYMBETTI_OK;
  });
}

SYMBETTI_API symbetti_status symbetti_ideal_describe(const symbetti_ideal* ideal,
                                                     char** out) {
  SYMBETTI_REQUIRE(ideal && out);
  return guarded([&] { return emit(ideal->parsed.ideal.to_string(), out); });
}

SYMBETTI_API symbetti_status symbetti_betti_compute(const symbetti_ideal* ideal,
                                                    int n, unsigned threads,
                                                    symbetti_betti** out) {
  SYMBETTI_REQUIRE(ideal && out);
  if (n < 1) return set_error(SYMBETTI_ERR_INVALID_ARGUMENT, "n must be at least 1");
  return guarded([&] {
    *out = new symbetti_betti{symbetti::betti_set(ideal->parsed.ideal, n, options_for(threads))};
    return SYMBETTI_OK;
  });
}

SYMBETTI_API void symbetti_betti_free(symbetti_betti* betti) { delete betti; }

SYMBETTI_API size_t symbetti_betti_record_count(const symbetti_betti* betti) {
  return betti ? betti->set.records().size() : 0;
}

SYMBETTI_API symbetti_status symbetti_betti_record(const symbetti_betti* betti,
                                                   size_t index, int* i,
                                                   int* degree, size_t capacity,
                                                   uint64_t* rank) {
  SYMBETTI_REQUIRE(betti && index < betti->set.records().size());
  const auto& r = betti->set.records()[index];
  if (i) *i = r.homological_degree;
  if (rank) *rank = r.rank;
  if (degree)
    for (std::size_t k = 0; k < r.degree.size() && k < capacity; ++k) degree[k] = r.degree[k];
  return SYMBETTI_OK;
}

SYMBETTI_API symbetti_status symbetti_betti_pd_reg(const symbetti_betti* betti,
                                                   int* pd, int* reg) {
  SYMBETTI_REQUIRE(betti);
  const auto pr = symbetti::pd_and_reg(betti->set);
  if (!pr) return set_error(SYMBETTI_ERR_UNDEFINED, "pd and reg are undefined for the zero ideal");
  if (pd) *pd = pr->pd;
  if (reg) *reg = pr->reg;
  return SYMBETTI_OK;
}

SYMBETTI_API symbetti_status symbetti_betti_render(const symbetti_betti* betti,
                                                   symbetti_format format,
                                                   int multigraded, char** out) {
  SYMBETTI_REQUIRE(betti && out);
  return guarded([&] {
    if (format == SYMBETTI_FORMAT_JSON) {
      auto j = symbetti::to_json(betti->set, true);
      if (multigraded) {
        nlohmann::json free = nlohmann::json::array();
        for (const auto& r : betti->set.free_part())
          free.push_back({{"i", r.homological_degree},
                          {"degree", r.degree.exponents()},
                          {"rank", r.rank}});
        j["free"] = std::move(free);
      }
      return emit(j.dump(2) + "\n", out);
    }
    if (!multigraded) return emit(symbetti::render_table(symbetti::graded_table(betti->set)), out);
    std::string text;
    for (const auto& r : betti->set.records()) {
      text += "beta_{" + std::to_string(r.homological_degree) + "," +
              r.degree.to_string() + "} = " + std::to_string(r.rank);
      if (r.degree[r.degree.size() - 1] > 0) text += "  [free]";
      text += "\n";
    }
    return emit(text, out);
  });
}

SYMBETTI_API symbetti_status symbetti_stable_compute(const symbetti_ideal* ideal,
                                                     unsigned threads,
                                                     symbetti_stable** out) {
  SYMBETTI_REQUIRE(ideal && out);
  return guarded([&] {
    *out = new symbetti_stable{
        symbetti::stabilize(ideal->parsed.ideal, options_for(threads)), threads};
    return SYMBETTI_OK;
  });
}

SYMBETTI_API void symbetti_stable_free(symbetti_stable* stable) { delete stable; }

SYMBETTI_API int symbetti_stable_m(const symbetti_stable* stable) {
  return stable ? stable->data.m : 0;
}

SYMBETTI_API symbetti_status symbetti_stable_record_count(
    const symbetti_stable* stable, int64_t n, uint64_t* count) {
  SYMBETTI_REQUIRE(stable && count);
  return guarded([&] {
    *count = symbetti::compose_B_size(stable->data, n);
    return SYMBETTI_OK;
  });
}

SYMBETTI_API symbetti_status symbetti_stable_extrapolate(
    const symbetti_stable* stable, int64_t n, symbetti_format format, char** out) {
  SYMBETTI_REQUIRE(stable && out);
  return guarded([&] {
    const auto result = symbetti::extrapolate(stable->data, n, options_for(stable->threads));
    if (format == SYMBETTI_FORMAT_JSON)
      return emit(symbetti::to_json(result).dump(2) + "\n", out);
    return emit(symbetti::render_extrapolation(result), out);
  });
}

SYMBETTI_API symbetti_status symbetti_stable_segments(const symbetti_stable* stable,
                                                      symbetti_format format,
                                                      char** out) {
  SYMBETTI_REQUIRE(stable && out);
  return guarded([&] {
    const auto segs = symbetti::segments(stable->data);
    if (format == SYMBETTI_FORMAT_JSON)
      return emit(nlohmann::json{{"segments", symbetti::to_json(segs)}}.dump(2) + "\n", out);
    return emit(symbetti::render_segments(segs), out);
  });
}

SYMBETTI_API symbetti_status symbetti_stable_asymptotics(
    const symbetti_stable* stable, symbetti_format format, char** out) {
  SYMBETTI_REQUIRE(stable && out);
  return guarded([&] {
    const auto profile = symbetti::asymptotics(stable->data);
    if (format == SYMBETTI_FORMAT_JSON)
      return emit(nlohmann::json{{"asymptotics", symbetti::to_json(profile)}}.dump(2) + "\n",
                  out);
    return emit(symbetti::describe(profile) + "\n", out);
  });
}

SYMBETTI_API symbetti_status symbetti_stable_pd_reg(const symbetti_stable* stable,
                                                    int64_t n, int64_t* pd,
                                                    int64_t* reg) {
  SYMBETTI_REQUIRE(stable);
  return guarded([&] {
    if (n < stable->data.m)
      return set_error(SYMBETTI_ERR_INVALID_ARGUMENT, "n must be at least m");
    const auto pr = symbetti::pd_reg_from_segments(symbetti::segments(stable->data), n);
    if (pd) *pd = pr.pd;
    if (reg) *reg = pr.reg;
    return SYMBETTI_OK;
  });
}

SYMBETTI_API symbetti_status symbetti_verify(const symbetti_ideal* ideal,
                                             int max_n, symbetti_format format,
                                             char** out) {
  SYMBETTI_REQUIRE(ideal && out);
  return guarded([&] {
    symbetti::VerifyOptions options;
    options.max_n = max_n;
    const auto report = symbetti::run_verification(ideal->parsed.ideal, options);
    *out = duplicate(format == SYMBETTI_FORMAT_JSON ? report.to_json().dump(2) + "\n"
                                                    : report.to_text());
    if (!report.passed())
      return set_error(SYMBETTI_ERR_VERIFY_FAILED, "verification failed");
    return SYMBETTI_OK;
  });
}

}  // extern "C"

#include "wmk/wmk.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "wmk/convergence.hpp"
#include "wmk/digits.hpp"
#include "wmk/errors.hpp"
#include "wmk/io.hpp"
#include "wmk/series.hpp"
#include "wmk/vfunction.hpp"

struct wmk_rep {
  wmk::Representation value;
};

namespace {

thread_local std::string g_last_error;

wmk_status fail(wmk_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions to status codes.
template <typename Fn>
wmk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return WMK_OK;
  } catch (const wmk::ParseError& e) {
    return fail(WMK_ERROR_PARSE, e.what());
  } catch (const wmk::NotConnectedError& e) {
    return fail(WMK_ERROR_NOT_CONNECTED, e.what());
  } catch (const wmk::HypothesisError& e) {
    return fail(WMK_ERROR_HYPOTHESIS, e.what());
  } catch (const wmk::DomainError& e) {
    return fail(WMK_ERROR_DOMAIN, e.what());
  } catch (const wmk::OverflowError& e) {
    return fail(WMK_ERROR_OVERFLOW, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(WMK_ERROR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WMK_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WMK_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(WMK_ERROR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wmk_status null_argument(const char* name) {
  return fail(WMK_ERROR_ARGUMENT, std::string("null pointer argument: ") + name);
}

wmk::Representation* make_rep(wmk::Representation rep, wmk_rep** out) {
  auto* handle = new wmk_rep{std::move(rep)};
  *out = handle;
  return &handle->value;
}

std::vector<std::int64_t> to_vector(const int64_t* data, size_t len) { return {data, data + len}; }

}  // namespace

extern "C" {

const char* wmk_version(void) { return "1.0.0"; }

const char* wmk_last_error(void) { return g_last_error.c_str(); }

const char* wmk_status_name(wmk_status status) {
  switch (status) {
    case WMK_OK: return "ok";
    case WMK_ERROR_PARSE: return "parse error";
    case WMK_ERROR_DOMAIN: return "domain error";
    case WMK_ERROR_NOT_CONNECTED: return "not connected";
    case WMK_ERROR_HYPOTHESIS: return "hypothesis violated";
    case WMK_ERROR_OVERFLOW: return "overflow";
    case WMK_ERROR_ARGUMENT: return "invalid argument";
    case WMK_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void wmk_string_free(char* str) { delete[] str; }

wmk_status wmk_rep_parse(const char* text, wmk_rep** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { make_rep(wmk::parse_representation(text), out); });
}

wmk_status wmk_rep_from_json(const char* json, wmk_rep** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    wmk::Json parsed;
    try {
      parsed = wmk::Json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw wmk::ParseError(e.what());
    }
    make_rep(wmk::representation_from_json(parsed), out);
  });
}

wmk_status wmk_rep_create(int64_t p, int n, const int64_t* dims, size_t count, wmk_rep** out) {
  if (!dims && count) return null_argument("dims");
  if (!out) return null_argument("out");
  return guarded([&] { make_rep(wmk::Representation(wmk::GroupSpec(p, n), to_vector(dims, count)), out); });
}

void wmk_rep_destroy(wmk_rep* rep) { delete rep; }

wmk_status wmk_rep_prime(const wmk_rep* rep, int64_t* out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  *out = rep->value.spec().p();
  return WMK_OK;
}

wmk_status wmk_rep_exponent(const wmk_rep* rep, int* out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  *out = rep->value.spec().n();
  return WMK_OK;
}

wmk_status wmk_rep_dimension(const wmk_rep* rep, int64_t* out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  *out = rep->value.dimension();
  return WMK_OK;
}

wmk_status wmk_rep_to_json(const wmk_rep* rep, char** out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(wmk::Json(rep->value).dump()); });
}

wmk_status wmk_rep_restrict(const wmk_rep* rep, wmk_rep** out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] { make_rep(wmk::restrict_to_subgroup(rep->value), out); });
}

wmk_status wmk_is_effective(const wmk_rep* rep, int* out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] { *out = wmk::is_effective(rep->value) ? 1 : 0; });
}

wmk_status wmk_has_pseudo_reflection(const wmk_rep* rep, int* out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] { *out = wmk::has_pseudo_reflection(rep->value) ? 1 : 0; });
}

wmk_status wmk_digit_sum(int64_t d, int64_t p, int n, int m, int64_t* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = wmk::digit_sum(d, wmk::GroupSpec(p, n), m); });
}

wmk_status wmk_invariant_D(const wmk_rep* rep, int m, int64_t* out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] { *out = wmk::invariant_D(rep->value, m); });
}

wmk_status wmk_v_jumps(const wmk_rep* rep, const int64_t* u, size_t len, int64_t* out) {
  if (!rep) return null_argument("rep");
  if (!u && len) return null_argument("u");
  if (!out) return null_argument("out");
  return guarded([&] { *out = wmk::v_jumps(rep->value, wmk::JumpSequence(rep->value.spec(), to_vector(u, len))); });
}

wmk_status wmk_v_orders(const wmk_rep* rep, const int64_t* orders, size_t len, int64_t* out) {
  if (!rep) return null_argument("rep");
  if (!orders && len) return null_argument("orders");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::vector<wmk::OrderEntry> entries;
    for (size_t i = 0; i < len; ++i) {
      if (orders[i] == WMK_BOTTOM) {
        entries.push_back(wmk::kBottom);
      } else {
        entries.push_back(orders[i]);
      }
    }
    *out = wmk::v_stratum(rep->value, wmk::OrderTuple(rep->value.spec(), std::move(entries)));
  });
}

wmk_status wmk_is_admissible(int64_t p, const int64_t* u, size_t len, int* out) {
  if (!u && len) return null_argument("u");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (!wmk::is_prime(p)) throw wmk::DomainError("p = " + std::to_string(p) + " is not prime");
    *out = wmk::is_admissible(p, to_vector(u, len)) ? 1 : 0;
  });
}

wmk_status wmk_convergence_status(const wmk_rep* rep, wmk_convergence* out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (wmk::convergence_status(rep->value).status) {
      case wmk::ConvergenceStatus::kStrict: *out = WMK_STRICT; break;
      case wmk::ConvergenceStatus::kBoundedBoundary: *out = WMK_BOUNDED_BOUNDARY; break;
      case wmk::ConvergenceStatus::kUnbounded: *out = WMK_UNBOUNDED; break;
    }
  });
}

wmk_status wmk_invariants_json(const wmk_rep* rep, char** out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(wmk::invariants_json(rep->value).dump()); });
}

wmk_status wmk_classify_json(const wmk_rep* rep, int sylow, char** out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] {
    wmk::Json j = {{"representation", rep->value}};
    if (sylow) {
      j["mode"] = "sylow";
      j["verdict"] = wmk::sylow_classify(rep->value);
    } else {
      j["mode"] = "quotient";
      j["verdict"] = wmk::classify_quotient(rep->value);
    }
    *out = copy_string(j.dump());
  });
}

wmk_status wmk_dimension_criterion_json(const wmk_rep* rep, char** out) {
  if (!rep) return null_argument("rep");
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(wmk::Json(wmk::dimension_criterion(rep->value)).dump()); });
}

wmk_status wmk_strata_json(int64_t p, int n, int64_t bound, const wmk_rep* rep, char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const wmk::GroupSpec spec(p, n);
    if (rep && !(rep->value.spec() == spec)) throw wmk::DomainError("representation group differs from (p, n)");
    *out = copy_string(wmk::strata_json(spec, bound, rep ? &rep->value : nullptr).dump());
  });
}

wmk_status wmk_sweep_json(int64_t p, int n, char** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = copy_string(wmk::Json(wmk::sweep(wmk::GroupSpec(p, n))).dump()); });
}

wmk_status wmk_series_json(const wmk_rep* rep, const wmk_series_options* options, char** out) {
  if (!rep) return null_argument("rep");
  if (!options) return null_argument("options");
  if (!out) return null_argument("out");
  if (!options->bound_vector && options->bound_vector_len) return null_argument("options->bound_vector");
  return guarded([&] {
    const wmk::SeriesOptions opts{options->per_stratum != 0, options->threads};
    const auto s = options->bound_vector
                       ? wmk::truncated_integral(rep->value, to_vector(options->bound_vector, options->bound_vector_len), opts)
                       : wmk::truncated_integral(rep->value, options->bound, opts);
    *out = copy_string(wmk::Json(s).dump());
  });
}

wmk_status wmk_trajectory_json(const wmk_rep* rep, const int64_t* bounds, size_t count, unsigned threads,
                               char** out) {
  if (!rep) return null_argument("rep");
  if (!bounds && count) return null_argument("bounds");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto rows = wmk::dimension_trajectory(rep->value, to_vector(bounds, count), threads);
    *out = copy_string(wmk::Json(rows).dump());
  });
}

}  // extern "C"

#include "symcube.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "symcube/dims.hpp"
#include "symcube/errors.hpp"
#include "symcube/lr.hpp"
#include "symcube/reports.hpp"

struct sc_report {
    symcube::Report rep;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

template <class F>
int guarded(F&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const symcube::excluded_input& e) {
        return fail(SC_EEXCLUDED, e.what());
    } catch (const symcube::parse_error& e) {
        return fail(SC_EPARSE, e.what());
    } catch (const symcube::invalid_input& e) {
        return fail(SC_EINVAL, e.what());
    } catch (const symcube::internal_error& e) {
        return fail(SC_EINTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(SC_EINTERNAL, e.what());
    }
}

char* copy_out(const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

int emit(sc_report** out, symcube::Report rep) {
    *out = new sc_report{std::move(rep)};
    return SC_OK;
}

symcube::GLWeight weight_of_array(int n, const long* weight, size_t len) {
    if (!weight) throw symcube::invalid_input("weight must not be NULL");
    return symcube::GLWeight(n, std::vector<long>(weight, weight + len));
}

} // namespace

extern "C" {

int sc_decompose(const char* algebra, int k, int n, sc_report** out) {
    if (!algebra || !out) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        return emit(out, symcube::run_decompose(
                             k, n, symcube::algebra_from_name(algebra)));
    });
}

int sc_verify_hwv(int n, const int* rows, size_t nrows, sc_report** out) {
    if (!out || (nrows > 0 && !rows)) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        std::vector<int> ids(rows, rows + nrows);
        return emit(out, symcube::run_verify_hwv(n, ids));
    });
}

int sc_multiplicity(int n, const char* weight_or_template, sc_report** out) {
    if (!weight_or_template || !out) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        return emit(out, symcube::run_multiplicity(n, weight_or_template));
    });
}

int sc_verify_certificate_file(const char* path, sc_report** out) {
    if (!path || !out) return fail(SC_EINVAL, "NULL argument");
    return guarded(
        [&] { return emit(out, symcube::run_verify_certificate(path)); });
}

int sc_verify_certificate_json(const char* json_text, sc_report** out) {
    if (!json_text || !out) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        return emit(out, symcube::run_verify_certificate_text(json_text));
    });
}

int sc_lr_expand(const char* lambda, const char* mu, int max_length,
                 int use_oracle, sc_report** out) {
    if (!lambda || !mu || !out) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        return emit(out,
                    symcube::run_lr(lambda, mu, max_length, use_oracle != 0));
    });
}

int sc_report_passed(const sc_report* rep) {
    return (rep && rep->rep.pass) ? 1 : 0;
}

int sc_report_render(const sc_report* rep, const char* format, int with_timing,
                     char** out_text) {
    if (!rep || !format || !out_text) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        std::string text = rep->rep.render(format, with_timing != 0);
        *out_text = copy_out(text);
        if (!*out_text) throw symcube::internal_error("out of memory");
        return SC_OK;
    });
}

void sc_report_free(sc_report* rep) { delete rep; }

void sc_string_free(char* text) { std::free(text); }

const char* sc_last_error(void) { return g_last_error.c_str(); }

int sc_weyl_dim(int n, const long* weight, size_t len, char** out) {
    if (!out) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        symcube::GLWeight w = weight_of_array(n, weight, len);
        if (!w.is_dominant())
            throw symcube::invalid_input("weight must be dominant: " +
                                         w.to_string());
        *out = copy_out(symcube::weyl_dim(w).str());
        if (!*out) throw symcube::internal_error("out of memory");
        return SC_OK;
    });
}

int sc_variety_dim(int n, const long* weight, size_t len, long* out) {
    if (!out) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        symcube::GLWeight w = weight_of_array(n, weight, len);
        if (!w.is_dominant())
            throw symcube::invalid_input("weight must be dominant: " +
                                         w.to_string());
        *out = symcube::variety_dim(w);
        return SC_OK;
    });
}

int sc_lr_coefficient(const char* lambda, const char* mu, const char* nu,
                      long* out) {
    if (!lambda || !mu || !nu || !out) return fail(SC_EINVAL, "NULL argument");
    return guarded([&] {
        *out = symcube::lr_coefficient(symcube::parse_partition_text(lambda),
                                       symcube::parse_partition_text(mu),
                                       symcube::parse_partition_text(nu));
        return SC_OK;
    });
}

} // extern "C"

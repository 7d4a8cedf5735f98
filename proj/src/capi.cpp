#include "intrinsic_metrics.h"

#include "caps.hpp"
#include "commands.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "geometry.hpp"
#include "metrics.hpp"
#include "rng.hpp"
#include "table.hpp"

#include <cstring>
#include <exception>
#include <string>
#include <utility>

struct ivm_table {
    ivm::Table table;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return IVM_OK;
    } catch (const ivm::param_error& e) {
        g_last_error = e.what();
        return IVM_ERR_PARAM;
    } catch (const ivm::numeric_error& e) {
        g_last_error = e.what();
        return IVM_ERR_NUMERIC;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return IVM_ERR_PARAM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return IVM_ERR_NUMERIC;
    }
}

int scalar(double* out, double value) {
    if (out == nullptr) {
        g_last_error = "null output pointer";
        return IVM_ERR_PARAM;
    }
    *out = value;
    return IVM_OK;
}

ivm::Polytope make_polytope(int n, const double* vertices, size_t count) {
    if (n < 1) throw ivm::param_error("dimension must be >= 1");
    if (vertices == nullptr || count == 0)
        throw ivm::param_error("polytope needs at least one vertex");
    ivm::Polytope P;
    P.vertices.reserve(count);
    for (size_t i = 0; i < count; ++i)
        P.vertices.emplace_back(vertices + i * n, vertices + (i + 1) * n);
    return P;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* ivm_version(void) { return "1.0.0"; }

const char* ivm_last_error(void) { return g_last_error.c_str(); }

int ivm_flag_coefficient(int n, int j, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::flag_coefficient(n, j); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_chern_constant(int n, int j, int ell, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::chern_constant(n, j, ell); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_cap_constant(int n, double beta, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::d_const(n, beta); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_annulus_constant(int n, double beta, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::affentranger_A(n, beta); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_cap_probability(int n, double beta, double h, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::cap_probability(n, beta, h); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_ball_intrinsic_volume(int n, int j, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::ball_intrinsic_volume(n, j); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_simplex_second_moment(int n, double beta, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::simplex_second_moment(n, beta); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_hull_length_expectation(long N, double beta, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::appendixB_expectation(N, beta); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_hull_length_quadrature(long N, double beta, double* out) {
    double v = 0;
    const int rc = guarded([&] { v = ivm::appendixB_quadrature(N, beta); });
    return rc != IVM_OK ? rc : scalar(out, v);
}

int ivm_intrinsic_volume(int n, int j, const double* vertices, size_t count,
                         int subspace_samples, long volume_samples,
                         uint64_t seed, double* value, double* std_error) {
    ivm::McEstimate est;
    const int rc = guarded([&] {
        const ivm::ConvexBody K = make_polytope(n, vertices, count);
        ivm::MetricConfig cfg;
        if (subspace_samples > 0) cfg.subspace_samples = subspace_samples;
        if (volume_samples > 0) cfg.volume_samples = volume_samples;
        ivm::RngStream rng(seed);
        est = ivm::intrinsic_volume(K, j, cfg, rng);
    });
    if (rc != IVM_OK) return rc;
    if (std_error != nullptr) *std_error = est.std_error;
    return scalar(value, est.value);
}

int ivm_delta_j(int n, int j, const double* p_vertices, size_t p_count,
                const double* q_vertices, size_t q_count,
                int subspace_samples, long volume_samples, uint64_t seed,
                double* value, double* std_error) {
    ivm::McEstimate est;
    const int rc = guarded([&] {
        const ivm::ConvexBody K = make_polytope(n, p_vertices, p_count);
        const ivm::ConvexBody L = make_polytope(n, q_vertices, q_count);
        ivm::MetricConfig cfg;
        if (subspace_samples > 0) cfg.subspace_samples = subspace_samples;
        if (volume_samples > 0) cfg.volume_samples = volume_samples;
        ivm::RngStream rng(seed);
        est = ivm::delta_j(K, L, j, cfg, rng);
    });
    if (rc != IVM_OK) return rc;
    if (std_error != nullptr) *std_error = est.std_error;
    return scalar(value, est.value);
}

int ivm_run_command(const char* command, const char* config_text,
                    ivm_table** out) {
    if (command == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return IVM_ERR_PARAM;
    }
    return guarded([&] {
        ivm::Table t = ivm::run_command(command, config_text ? config_text : "");
        *out = new ivm_table{std::move(t)};
    });
}

size_t ivm_table_rows(const ivm_table* t) { return t ? t->table.row_count() : 0; }

size_t ivm_table_cols(const ivm_table* t) { return t ? t->table.col_count() : 0; }

const char* ivm_table_column_name(const ivm_table* t, size_t col) {
    if (t == nullptr || col >= t->table.col_count()) return nullptr;
    return t->table.column_name(col).c_str();
}

double ivm_table_cell(const ivm_table* t, size_t row, size_t col) {
    if (t == nullptr || row >= t->table.row_count() || col >= t->table.col_count())
        return 0.0;
    return t->table.cell(row, col);
}

const char* ivm_table_label(const ivm_table* t, size_t row) {
    if (t == nullptr || !t->table.has_labels() || row >= t->table.row_count())
        return nullptr;
    return t->table.label(row).c_str();
}

char* ivm_table_csv(const ivm_table* t) {
    return t ? dup_string(t->table.csv()) : nullptr;
}

char* ivm_table_meta_json(const ivm_table* t) {
    return t ? dup_string(t->table.meta_json()) : nullptr;
}

char* ivm_table_doc_json(const ivm_table* t) {
    return t ? dup_string(t->table.doc_json()) : nullptr;
}

void ivm_string_free(char* s) { delete[] s; }

void ivm_table_free(ivm_table* t) { delete t; }

}  // extern "C"

/*
 * qsc — exact classification engine for codimension-two subvarieties of
 * smooth quadrics.
 *
 * C interface of the shared library. Every entry point fills an opaque
 * result handle carrying rendered output (and an error message when the
 * status is nonzero); the caller frees it with qsc_result_free. All
 * computation is exact rational arithmetic; numeric arguments are passed
 * as decimal strings, optionally "p/q".
 */
#ifndef QSC_H
#define QSC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsc_status {
    QSC_OK = 0,
    QSC_ERROR_USAGE = 1,       /* malformed arguments */
    QSC_ERROR_DOMAIN = 2,      /* precondition violated (e.g. the singular degree) */
    QSC_ERROR_VERIFY = 3,      /* a verification check failed */
    QSC_ERROR_UNSUPPORTED = 4, /* requested data outside the catalog */
    QSC_ERROR_INTERNAL = 5
} qsc_status;

typedef enum qsc_format {
    QSC_FORMAT_TEXT = 0,
    QSC_FORMAT_JSON = 1,
    QSC_FORMAT_MARKDOWN = 2,
    QSC_FORMAT_CSV = 3
} qsc_format;

typedef struct qsc_result qsc_result;

const char* qsc_result_text(const qsc_result* r);
const char* qsc_result_error(const qsc_result* r);
void qsc_result_free(qsc_result* r);

const char* qsc_version(void);

/* Evaluate a cohomology-ring expression on Q^n (symbols h, L, L1, L2). */
qsc_status qsc_chow_eval(int quadric_dim, const char* expr, qsc_format fmt,
                         qsc_result** out);

/* Derived invariants, Hilbert polynomials and the normal-bundle Euler
 * characteristic of a threefold on Q^5 with the given d, g, chi_S, chi_X. */
qsc_status qsc_invariants(const char* d, const char* g, const char* chi_s,
                          const char* chi_x, qsc_format fmt, qsc_result** out);

/* Solve the surface-scroll linear system at degree d; at d = 8 reports the
 * one-parameter family. */
qsc_status qsc_scroll_solve(const char* d, qsc_format fmt, qsc_result** out);

/* Scan even degrees up to max_degree for solvability of the fourfold-over-
 * threefold system with L^4 = d adjoined. */
qsc_status qsc_scroll_fourfold_scan(int max_degree, qsc_format fmt, qsc_result** out);

/* The descent bounding the degree of a surface scroll. */
qsc_status qsc_bounds_cascade(qsc_format fmt, qsc_result** out);

/* Eliminate the candidate (d, g) pairs beyond degree 12. */
qsc_status qsc_exclude_pairs(qsc_format fmt, qsc_result** out);

/* Run every check on one catalog row ("A".."O"). Status QSC_ERROR_VERIFY if
 * a check fails. */
qsc_status qsc_verify_type(const char* label, qsc_format fmt, qsc_result** out);

/* Check a user-supplied two-term resolution "E -> F" on Q^5. */
qsc_status qsc_verify_presentation(const char* presentation, qsc_format fmt,
                                   qsc_result** out);

/* Emit the classification table; scope is "d10" or "scrolls". */
qsc_status qsc_table(const char* scope, qsc_format fmt, qsc_result** out);

/* Check the residuation table (degree and genus of every link). */
qsc_status qsc_liaison(qsc_format fmt, qsc_result** out);

/* The repaired-formula report with live oracle evidence. */
qsc_status qsc_errata(qsc_format fmt, qsc_result** out);

#ifdef __cplusplus
}
#endif

#endif /* QSC_H */

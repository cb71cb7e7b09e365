// Copyright 2026 The Everett Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/*
 * C interface to the Everett-picture protocol simulator.
 *
 * Objects are opaque handles created by ev_*_run / ev_*_create style calls
 * and released with the matching ev_*_free. Pointers returned as
 * `const ev_state *` or `const ev_trace *` from a result are borrowed and
 * stay valid until that result is freed. Strings returned through `char **`
 * are owned by the caller and released with ev_string_free.
 *
 * Every fallible call returns an ev_status; on failure, ev_last_error()
 * describes the problem for the calling thread.
 */

#ifndef EVERETT_EVERETT_H
#define EVERETT_EVERETT_H

#include <stddef.h>

#if defined(EVERETT_BUILDING_LIBRARY)
#define EV_API __attribute__((visibility("default")))
#else
#define EV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ev_status {
    EV_OK = 0,
    EV_ERR_INVALID_ARGUMENT = 1,
    EV_ERR_LABEL = 2,
    EV_ERR_ARITY = 3,
    EV_ERR_ZERO_STATE = 4,
    EV_ERR_LOCALITY = 5,
    EV_ERR_PROTOCOL = 6,
    EV_ERR_PARSE = 7,
    EV_ERR_INTERNAL = 8
} ev_status;

EV_API const char *ev_status_string(ev_status status);
EV_API const char *ev_last_error(void);
EV_API void ev_string_free(char *s);

EV_API double ev_default_tolerance(void);
EV_API ev_status ev_set_default_tolerance(double tol);

/* ---- states ---------------------------------------------------------- */

typedef struct ev_state ev_state;
typedef struct ev_gate ev_gate;

/* `re` and `im` hold 2^n_wires amplitudes; first wire is the most
 * significant bit of the basis index. */
EV_API ev_status ev_state_create(const char *const *wires, size_t n_wires, const double *re, const double *im,
                                 ev_state **out);
EV_API ev_status ev_state_basis(const char *wire, int bit, ev_state **out);
EV_API ev_status ev_state_bell(int x, int y, const char *first, const char *second, ev_state **out);
EV_API ev_status ev_state_tensor(const ev_state *s1, const ev_state *s2, ev_state **out);
EV_API ev_status ev_state_apply(const ev_gate *gate, const char *const *targets, size_t n_targets,
                                const ev_state *s, ev_state **out);
EV_API void ev_state_free(ev_state *s);

EV_API size_t ev_state_wire_count(const ev_state *s);
EV_API const char *ev_state_wire(const ev_state *s, size_t i);
EV_API size_t ev_state_dimension(const ev_state *s);
EV_API ev_status ev_state_amplitude(const ev_state *s, size_t index, double *re, double *im);
EV_API ev_status ev_state_inner_product(const ev_state *s1, const ev_state *s2, double *re, double *im);
EV_API ev_status ev_state_equal_up_to_phase(const ev_state *s1, const ev_state *s2, double tol, int *equal);
EV_API ev_status ev_state_schmidt_rank(const ev_state *s, const char *const *left, size_t n_left,
                                       const char *const *right, size_t n_right, double tol, size_t *rank);
/* Text dump: "wires: ..." header, then "<bits> <re> <im>" lines. */
EV_API ev_status ev_state_dump(const ev_state *s, char **out);

/* ---- gates ----------------------------------------------------------- */

EV_API ev_status ev_gate_sigma(int p, int q, ev_gate **out);
EV_API ev_status ev_gate_cu_sigma(ev_gate **out);
EV_API ev_status ev_gate_cu_meas(ev_gate **out);
EV_API ev_status ev_gate_u_b_decoder(ev_gate **out);
EV_API void ev_gate_free(ev_gate *g);

EV_API const char *ev_gate_name(const ev_gate *g);
EV_API size_t ev_gate_arity(const ev_gate *g);
EV_API ev_status ev_gate_entry(const ev_gate *g, size_t row, size_t col, double *re, double *im);
EV_API double ev_gate_unitarity_error(const ev_gate *g);
EV_API ev_status ev_gate_str(const ev_gate *g, char **out);

/* ---- traces ---------------------------------------------------------- */

typedef struct ev_trace ev_trace;

EV_API size_t ev_trace_size(const ev_trace *t);
/* "<seq> <kind> <payload...> norm2=<value>" */
EV_API ev_status ev_trace_line(const ev_trace *t, size_t i, char **out);
/* {"event": ..., "seq": ..., ...} */
EV_API ev_status ev_trace_json(const ev_trace *t, size_t i, char **out);
EV_API ev_status ev_trace_audit_locality(const ev_trace *t, int *ok);

/* ---- superdense coding ----------------------------------------------- */

typedef struct ev_superdense ev_superdense;

EV_API ev_status ev_superdense_run(int p, int q, ev_superdense **out);
EV_API void ev_superdense_free(ev_superdense *r);
EV_API const char *ev_superdense_pointer(const ev_superdense *r);
EV_API size_t ev_superdense_branch_count(const ev_superdense *r);
EV_API ev_status ev_superdense_branch(const ev_superdense *r, size_t i, const char **label, double *raw_weight,
                                      double *weight);
EV_API const ev_state *ev_superdense_final_state(const ev_superdense *r);
EV_API const ev_trace *ev_superdense_trace(const ev_superdense *r);

/* labels[2p+q] receives the two-character pointer Bob reads for (p, q). */
EV_API ev_status ev_decode_table(char labels[4][3], int *bijective, int *matches_identity);

/* ---- teleportation --------------------------------------------------- */

typedef struct ev_teleport ev_teleport;

EV_API ev_status ev_teleport_run(double alpha_re, double alpha_im, double beta_re, double beta_im,
                                 ev_teleport **out);
EV_API void ev_teleport_free(ev_teleport *r);
EV_API double ev_teleport_fidelity(const ev_teleport *r);
EV_API size_t ev_teleport_schmidt_rank(const ev_teleport *r);
EV_API const ev_state *ev_teleport_bob_qubit(const ev_teleport *r);
EV_API const ev_state *ev_teleport_final_state(const ev_teleport *r);
EV_API const ev_trace *ev_teleport_trace(const ev_teleport *r);

/* ---- circuit files --------------------------------------------------- */

typedef struct ev_program ev_program;
typedef struct ev_execution ev_execution;

typedef struct ev_parse_error {
    int line;
    int column;
    char message[256];
    char expected[256];
} ev_parse_error;

/* On EV_ERR_PARSE, `error` (if non-NULL) receives the position. */
EV_API ev_status ev_program_parse(const char *source, ev_program **out, ev_parse_error *error);
EV_API void ev_program_free(ev_program *p);
EV_API ev_status ev_program_render(const ev_program *p, char **out);

/* EV_ERR_LOCALITY if a gate touches a wire its actor does not hold.
 * Failed assertions do not make this call fail. */
EV_API ev_status ev_program_exec(const ev_program *p, ev_execution **out);
EV_API void ev_execution_free(ev_execution *e);
EV_API size_t ev_execution_assertion_count(const ev_execution *e);
EV_API ev_status ev_execution_assertion(const ev_execution *e, size_t i, int *line, const char **kind, int *passed,
                                        const char **detail);
EV_API int ev_execution_all_passed(const ev_execution *e);
EV_API const ev_state *ev_execution_final_state(const ev_execution *e);
EV_API const ev_trace *ev_execution_trace(const ev_execution *e);

/* The committed fixtures. The superdense one is instantiated for (p, q)
 * and asserts the pointer from ev_decode_table. */
EV_API ev_status ev_fixture_superdense(int p, int q, char **out);
EV_API ev_status ev_fixture_teleport(char **out);

/* ---- self-check ------------------------------------------------------ */

typedef struct ev_report ev_report;

EV_API ev_status ev_verify_run(ev_report **out);
EV_API void ev_report_free(ev_report *r);
EV_API size_t ev_report_count(const ev_report *r);
EV_API ev_status ev_report_check(const ev_report *r, size_t i, int *id, const char **name, int *passed,
                                 const char **detail);
EV_API int ev_report_all_passed(const ev_report *r);
/* Decode-table finding, e.g. "00->00 01->10 10->01 11->11". */
EV_API ev_status ev_decode_table_summary(char **out);

#ifdef __cplusplus
}
#endif

#endif /* EVERETT_EVERETT_H */

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


#include "everett/everett.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "gates.hpp"
#include "protocols.hpp"
#include "statevector.hpp"
#include "verify.hpp"

struct ev_state {
    everett::PureState value;
};

struct ev_gate {
    everett::UnitaryGate value;
};

struct ev_trace {
    everett::Trace events;
};

struct ev_superdense {
    everett::SuperdenseResult result;
    ev_state final_state;
    ev_trace trace;
};

struct ev_teleport {
    everett::TeleportResult result;
    ev_state bob;
    ev_state final_state;
    ev_trace trace;
};

struct ev_program {
    everett::CircuitProgram value;
};

struct ev_execution {
    everett::Execution value;
    ev_state final_state;
    ev_trace trace;
    std::vector<std::string> kinds;
};

struct ev_report {
    std::vector<everett::CheckResult> checks;
};

namespace {

thread_local std::string g_last_error;

ev_status to_status(everett::ErrorCode code) {
    switch (code) {
        case everett::ErrorCode::InvalidArgument:
            return EV_ERR_INVALID_ARGUMENT;
        case everett::ErrorCode::Label:
            return EV_ERR_LABEL;
        case everett::ErrorCode::Arity:
            return EV_ERR_ARITY;
        case everett::ErrorCode::ZeroState:
            return EV_ERR_ZERO_STATE;
        case everett::ErrorCode::Locality:
            return EV_ERR_LOCALITY;
        case everett::ErrorCode::Protocol:
            return EV_ERR_PROTOCOL;
        case everett::ErrorCode::Internal:
            return EV_ERR_INTERNAL;
    }
    return EV_ERR_INTERNAL;
}

ev_status set_error(ev_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `body` and converts any exception into a status plus message.
template <typename F>
ev_status guarded(F &&body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const everett::Error &e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return set_error(EV_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return set_error(EV_ERR_INTERNAL, e.what());
    }
}

ev_status null_argument(const char *name) {
    return set_error(EV_ERR_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

#define EV_REQUIRE(ptr)                  \
    do {                                 \
        if ((ptr) == nullptr) {          \
            return null_argument(#ptr);  \
        }                                \
    } while (0)

char *copy_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<everett::WireLabel> labels(const char *const *wires, std::size_t n) {
    std::vector<everett::WireLabel> out;
    for (std::size_t k = 0; k < n; ++k) {
        if (wires[k] == nullptr) {
            everett::fail(everett::ErrorCode::InvalidArgument, "null wire label");
        }
        out.emplace_back(wires[k]);
    }
    return out;
}

template <typename T>
ev_status emit(T **out, T *value) {
    *out = value;
    return EV_OK;
}

}  // namespace

extern "C" {

const char *ev_status_string(ev_status status) {
    switch (status) {
        case EV_OK:
            return "ok";
        case EV_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case EV_ERR_LABEL:
            return "wire label error";
        case EV_ERR_ARITY:
            return "arity mismatch";
        case EV_ERR_ZERO_STATE:
            return "zero state";
        case EV_ERR_LOCALITY:
            return "locality violation";
        case EV_ERR_PROTOCOL:
            return "protocol check failed";
        case EV_ERR_PARSE:
            return "parse error";
        case EV_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *ev_last_error(void) { return g_last_error.c_str(); }

void ev_string_free(char *s) { delete[] s; }

double ev_default_tolerance(void) { return everett::default_tolerance(); }

ev_status ev_set_default_tolerance(double tol) {
    return guarded([&] {
        everett::set_default_tolerance(tol);
        return EV_OK;
    });
}

// ---- states

ev_status ev_state_create(const char *const *wires, size_t n_wires, const double *re, const double *im,
                          ev_state **out) {
    EV_REQUIRE(out);
    EV_REQUIRE(re);
    EV_REQUIRE(im);
    if (n_wires > 0) {
        EV_REQUIRE(wires);
    }
    return guarded([&] {
        if (n_wires > 24) {
            everett::fail(everett::ErrorCode::InvalidArgument, "too many wires");
        }
        std::size_t dim = std::size_t{1} << n_wires;
        std::vector<everett::Amplitude> amps(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            amps[k] = {re[k], im[k]};
        }
        return emit(out, new ev_state{everett::PureState(labels(wires, n_wires), std::move(amps))});
    });
}

ev_status ev_state_basis(const char *wire, int bit, ev_state **out) {
    EV_REQUIRE(wire);
    EV_REQUIRE(out);
    return guarded([&] {
        if (bit != 0 && bit != 1) {
            everett::fail(everett::ErrorCode::InvalidArgument, "bit must be 0 or 1");
        }
        return emit(out, new ev_state{everett::PureState::basis({wire}, static_cast<std::uint64_t>(bit))});
    });
}

ev_status ev_state_bell(int x, int y, const char *first, const char *second, ev_state **out) {
    EV_REQUIRE(first);
    EV_REQUIRE(second);
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, new ev_state{everett::bell(x, y, first, second)}); });
}

ev_status ev_state_tensor(const ev_state *s1, const ev_state *s2, ev_state **out) {
    EV_REQUIRE(s1);
    EV_REQUIRE(s2);
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, new ev_state{everett::tensor(s1->value, s2->value)}); });
}

ev_status ev_state_apply(const ev_gate *gate, const char *const *targets, size_t n_targets, const ev_state *s,
                         ev_state **out) {
    EV_REQUIRE(gate);
    EV_REQUIRE(s);
    EV_REQUIRE(out);
    if (n_targets > 0) {
        EV_REQUIRE(targets);
    }
    return guarded([&] {
        auto t = labels(targets, n_targets);
        return emit(out, new ev_state{everett::apply(gate->value, t, s->value)});
    });
}

void ev_state_free(ev_state *s) { delete s; }

size_t ev_state_wire_count(const ev_state *s) { return s ? s->value.num_wires() : 0; }

const char *ev_state_wire(const ev_state *s, size_t i) {
    if (!s || i >= s->value.num_wires()) {
        return nullptr;
    }
    return s->value.wires()[i].c_str();
}

size_t ev_state_dimension(const ev_state *s) { return s ? s->value.dimension() : 0; }

ev_status ev_state_amplitude(const ev_state *s, size_t index, double *re, double *im) {
    EV_REQUIRE(s);
    EV_REQUIRE(re);
    EV_REQUIRE(im);
    if (index >= s->value.dimension()) {
        return set_error(EV_ERR_INVALID_ARGUMENT, "amplitude index out of range");
    }
    auto a = s->value.amplitude(index);
    *re = a.real();
    *im = a.imag();
    return EV_OK;
}

ev_status ev_state_inner_product(const ev_state *s1, const ev_state *s2, double *re, double *im) {
    EV_REQUIRE(s1);
    EV_REQUIRE(s2);
    EV_REQUIRE(re);
    EV_REQUIRE(im);
    return guarded([&] {
        auto z = everett::inner_product(s1->value, s2->value);
        *re = z.real();
        *im = z.imag();
        return EV_OK;
    });
}

ev_status ev_state_equal_up_to_phase(const ev_state *s1, const ev_state *s2, double tol, int *equal) {
    EV_REQUIRE(s1);
    EV_REQUIRE(s2);
    EV_REQUIRE(equal);
    return guarded([&] {
        if (s1->value.is_zero() || s2->value.is_zero()) {
            everett::fail(everett::ErrorCode::ZeroState, "equal_up_to_phase: zero state");
        }
        *equal = everett::equal_up_to_phase(s1->value, s2->value, tol) ? 1 : 0;
        return EV_OK;
    });
}

ev_status ev_state_schmidt_rank(const ev_state *s, const char *const *left, size_t n_left, const char *const *right,
                                size_t n_right, double tol, size_t *rank) {
    EV_REQUIRE(s);
    EV_REQUIRE(rank);
    if (n_left > 0) {
        EV_REQUIRE(left);
    }
    if (n_right > 0) {
        EV_REQUIRE(right);
    }
    return guarded([&] {
        everett::Bipartition cut{labels(left, n_left), labels(right, n_right)};
        *rank = everett::schmidt_factor(s->value, cut, tol).rank;
        return EV_OK;
    });
}

ev_status ev_state_dump(const ev_state *s, char **out) {
    EV_REQUIRE(s);
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, copy_string(everett::dump_state(s->value))); });
}

// ---- gates

ev_status ev_gate_sigma(int p, int q, ev_gate **out) {
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, new ev_gate{everett::sigma(p, q)}); });
}

ev_status ev_gate_cu_sigma(ev_gate **out) {
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, new ev_gate{everett::cu_sigma()}); });
}

ev_status ev_gate_cu_meas(ev_gate **out) {
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, new ev_gate{everett::cu_meas()}); });
}

ev_status ev_gate_u_b_decoder(ev_gate **out) {
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, new ev_gate{everett::u_b_decoder()}); });
}

void ev_gate_free(ev_gate *g) { delete g; }

const char *ev_gate_name(const ev_gate *g) { return g ? g->value.name().c_str() : nullptr; }

size_t ev_gate_arity(const ev_gate *g) { return g ? g->value.arity() : 0; }

ev_status ev_gate_entry(const ev_gate *g, size_t row, size_t col, double *re, double *im) {
    EV_REQUIRE(g);
    EV_REQUIRE(re);
    EV_REQUIRE(im);
    if (row >= g->value.dimension() || col >= g->value.dimension()) {
        return set_error(EV_ERR_INVALID_ARGUMENT, "gate entry out of range");
    }
    auto z = g->value.at(row, col);
    *re = z.real();
    *im = z.imag();
    return EV_OK;
}

double ev_gate_unitarity_error(const ev_gate *g) { return g ? g->value.unitarity_error() : -1.0; }

ev_status ev_gate_str(const ev_gate *g, char **out) {
    EV_REQUIRE(g);
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, copy_string(g->value.str())); });
}

// ---- traces

size_t ev_trace_size(const ev_trace *t) { return t ? t->events.size() : 0; }

ev_status ev_trace_line(const ev_trace *t, size_t i, char **out) {
    EV_REQUIRE(t);
    EV_REQUIRE(out);
    if (i >= t->events.size()) {
        return set_error(EV_ERR_INVALID_ARGUMENT, "trace index out of range");
    }
    return guarded([&] { return emit(out, copy_string(everett::event_line(t->events[i]))); });
}

ev_status ev_trace_json(const ev_trace *t, size_t i, char **out) {
    EV_REQUIRE(t);
    EV_REQUIRE(out);
    if (i >= t->events.size()) {
        return set_error(EV_ERR_INVALID_ARGUMENT, "trace index out of range");
    }
    return guarded([&] { return emit(out, copy_string(everett::event_json(t->events[i]))); });
}

ev_status ev_trace_audit_locality(const ev_trace *t, int *ok) {
    EV_REQUIRE(t);
    EV_REQUIRE(ok);
    return guarded([&] {
        auto audit = everett::audit_locality(t->events);
        *ok = audit.ok ? 1 : 0;
        if (!audit.ok) {
            g_last_error = audit.violations.front();
        }
        return EV_OK;
    });
}

// ---- superdense

ev_status ev_superdense_run(int p, int q, ev_superdense **out) {
    EV_REQUIRE(out);
    return guarded([&] {
        everett::SuperdenseResult r = everett::run_superdense(p, q);
        ev_state final_state{r.final_state};
        ev_trace trace{r.trace};
        return emit(out, new ev_superdense{std::move(r), std::move(final_state), std::move(trace)});
    });
}

void ev_superdense_free(ev_superdense *r) { delete r; }

const char *ev_superdense_pointer(const ev_superdense *r) { return r ? r->result.pointer.c_str() : nullptr; }

size_t ev_superdense_branch_count(const ev_superdense *r) { return r ? r->result.branch_count : 0; }

ev_status ev_superdense_branch(const ev_superdense *r, size_t i, const char **label, double *raw_weight,
                               double *weight) {
    EV_REQUIRE(r);
    EV_REQUIRE(label);
    EV_REQUIRE(raw_weight);
    EV_REQUIRE(weight);
    if (i >= r->result.branches.branches.size()) {
        return set_error(EV_ERR_INVALID_ARGUMENT, "branch index out of range");
    }
    const auto &br = r->result.branches.branches[i];
    *label = br.label.c_str();
    *raw_weight = br.raw_weight;
    *weight = br.weight;
    return EV_OK;
}

const ev_state *ev_superdense_final_state(const ev_superdense *r) { return r ? &r->final_state : nullptr; }

const ev_trace *ev_superdense_trace(const ev_superdense *r) { return r ? &r->trace : nullptr; }

ev_status ev_decode_table(char labels[4][3], int *bijective, int *matches_identity) {
    EV_REQUIRE(labels);
    EV_REQUIRE(bijective);
    EV_REQUIRE(matches_identity);
    return guarded([&] {
        everett::DecodeTable table = everett::derive_decode_table();
        for (int k = 0; k < 4; ++k) {
            const std::string &ptr = table.pointer_for.at(everett::bit_string(static_cast<std::uint64_t>(k), 2));
            labels[k][0] = ptr[0];
            labels[k][1] = ptr[1];
            labels[k][2] = '\0';
        }
        *bijective = table.bijective ? 1 : 0;
        *matches_identity = table.is_identity ? 1 : 0;
        return EV_OK;
    });
}

// ---- teleportation

ev_status ev_teleport_run(double alpha_re, double alpha_im, double beta_re, double beta_im, ev_teleport **out) {
    EV_REQUIRE(out);
    return guarded([&] {
        everett::TeleportResult r = everett::run_teleport({alpha_re, alpha_im}, {beta_re, beta_im});
        ev_state bob{r.bob_qubit};
        ev_state final_state{r.final_state};
        ev_trace trace{r.trace};
        return emit(out, new ev_teleport{std::move(r), std::move(bob), std::move(final_state), std::move(trace)});
    });
}

void ev_teleport_free(ev_teleport *r) { delete r; }

double ev_teleport_fidelity(const ev_teleport *r) { return r ? r->result.fidelity : -1.0; }

size_t ev_teleport_schmidt_rank(const ev_teleport *r) { return r ? r->result.schmidt_rank_b_cut : 0; }

const ev_state *ev_teleport_bob_qubit(const ev_teleport *r) { return r ? &r->bob : nullptr; }

const ev_state *ev_teleport_final_state(const ev_teleport *r) { return r ? &r->final_state : nullptr; }

const ev_trace *ev_teleport_trace(const ev_teleport *r) { return r ? &r->trace : nullptr; }

// ---- circuits

ev_status ev_program_parse(const char *source, ev_program **out, ev_parse_error *error) {
    EV_REQUIRE(source);
    EV_REQUIRE(out);
    return guarded([&] {
        everett::ParseResult parsed = everett::parse_circuit(source);
        if (const auto *err = std::get_if<everett::ParseError>(&parsed)) {
            if (error) {
                error->line = err->line;
                error->column = err->column;
                std::snprintf(error->message, sizeof error->message, "%s", err->message.c_str());
                std::snprintf(error->expected, sizeof error->expected, "%s", err->expected.c_str());
            }
            return set_error(EV_ERR_PARSE, err->str());
        }
        return emit(out, new ev_program{std::move(std::get<everett::CircuitProgram>(parsed))});
    });
}

void ev_program_free(ev_program *p) { delete p; }

ev_status ev_program_render(const ev_program *p, char **out) {
    EV_REQUIRE(p);
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, copy_string(everett::render_ascii(p->value))); });
}

ev_status ev_program_exec(const ev_program *p, ev_execution **out) {
    EV_REQUIRE(p);
    EV_REQUIRE(out);
    return guarded([&] {
        everett::Execution ex = everett::exec_circuit(p->value);
        ev_state final_state{ex.world.state()};
        ev_trace trace{ex.world.trace()};
        std::vector<std::string> kinds;
        for (const auto &a : ex.assertions) {
            kinds.emplace_back(a.kind == everett::StatementKind::AssertPointer ? "pointer" : "factor");
        }
        return emit(out, new ev_execution{std::move(ex), std::move(final_state), std::move(trace), std::move(kinds)});
    });
}

void ev_execution_free(ev_execution *e) { delete e; }

size_t ev_execution_assertion_count(const ev_execution *e) { return e ? e->value.assertions.size() : 0; }

ev_status ev_execution_assertion(const ev_execution *e, size_t i, int *line, const char **kind, int *passed,
                                 const char **detail) {
    EV_REQUIRE(e);
    EV_REQUIRE(line);
    EV_REQUIRE(kind);
    EV_REQUIRE(passed);
    EV_REQUIRE(detail);
    if (i >= e->value.assertions.size()) {
        return set_error(EV_ERR_INVALID_ARGUMENT, "assertion index out of range");
    }
    const auto &a = e->value.assertions[i];
    *line = a.line;
    *kind = e->kinds[i].c_str();
    *passed = a.passed ? 1 : 0;
    *detail = a.detail.c_str();
    return EV_OK;
}

int ev_execution_all_passed(const ev_execution *e) { return e && e->value.all_passed() ? 1 : 0; }

const ev_state *ev_execution_final_state(const ev_execution *e) { return e ? &e->final_state : nullptr; }

const ev_trace *ev_execution_trace(const ev_execution *e) { return e ? &e->trace : nullptr; }

ev_status ev_fixture_superdense(int p, int q, char **out) {
    EV_REQUIRE(out);
    return guarded([&] {
        everett::DecodeTable table = everett::derive_decode_table();
        if ((p != 0 && p != 1) || (q != 0 && q != 1)) {
            everett::fail(everett::ErrorCode::InvalidArgument, "p and q must be bits");
        }
        const std::string &ptr = table.pointer_for.at(std::to_string(p) + std::to_string(q));
        return emit(out, copy_string(everett::superdense_fixture(p, q, ptr)));
    });
}

ev_status ev_fixture_teleport(char **out) {
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, copy_string(everett::teleport_fixture())); });
}

// ---- self-check

ev_status ev_verify_run(ev_report **out) {
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, new ev_report{everett::run_verification()}); });
}

void ev_report_free(ev_report *r) { delete r; }

size_t ev_report_count(const ev_report *r) { return r ? r->checks.size() : 0; }

ev_status ev_report_check(const ev_report *r, size_t i, int *id, const char **name, int *passed,
                          const char **detail) {
    EV_REQUIRE(r);
    EV_REQUIRE(id);
    EV_REQUIRE(name);
    EV_REQUIRE(passed);
    EV_REQUIRE(detail);
    if (i >= r->checks.size()) {
        return set_error(EV_ERR_INVALID_ARGUMENT, "check index out of range");
    }
    const auto &c = r->checks[i];
    *id = c.id;
    *name = c.name.c_str();
    *passed = c.passed ? 1 : 0;
    *detail = c.detail.c_str();
    return EV_OK;
}

int ev_report_all_passed(const ev_report *r) {
    if (!r) {
        return 0;
    }
    for (const auto &c : r->checks) {
        if (!c.passed) {
            return 0;
        }
    }
    return 1;
}

ev_status ev_decode_table_summary(char **out) {
    EV_REQUIRE(out);
    return guarded([&] { return emit(out, copy_string(everett::describe_decode_table())); });
}

}  // extern "C"

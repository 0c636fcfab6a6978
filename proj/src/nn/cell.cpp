#include "xspc/nn/cell.hpp"

#include <cmath>
#include <string>

#include "xspc/errors.hpp"

namespace xspc::nn {

namespace {

inline Vec sigmoid(const Vec& x) {
    return (1.0 / (1.0 + (-x.array()).exp())).matrix();
}

void check_step_dims(const LstmParams& p, const CellState& state, const Vec& x) {
    if (state.h.size() != p.hidden() || state.cell.size() != p.hidden())
        throw xspc::ShapeError("cell state size " + std::to_string(state.h.size()) +
                               " does not match hidden size " + std::to_string(p.hidden()));
    if (x.size() != p.input())
        throw xspc::ShapeError("input size " + std::to_string(x.size()) +
                               " does not match expected " + std::to_string(p.input()));
}

// One step shared by both cells; `control` is null for the plain LSTM.
CellState step_forward(const LstmParams& p, const GateControlParams* control, const Vec& c,
                       const CellState& state, const Vec& x, GateMode mode, StepCache* cache) {
    const int hidden = p.hidden();

    Vec z(hidden + x.size());
    z << state.h, x;

    Vec a_f = p.w_f * z + p.b_f;
    Vec a_i = p.w_i * z + p.b_i;
    Vec a_o = p.w_o * z + p.b_o;
    Vec a_g = p.w_g * z + p.b_g;

    Vec f, i, o;
    Vec r_f, r_i, r_o;
    if (control) {
        r_f = control->w_cf * c + control->b_cf;
        r_i = control->w_ci * c + control->b_ci;
        r_o = control->w_co * c + control->b_co;
        if (mode == GateMode::ProductInsideSigmoid) {
            f = sigmoid(a_f.cwiseProduct(r_f));
            i = sigmoid(a_i.cwiseProduct(r_i));
            o = sigmoid(a_o.cwiseProduct(r_o));
        } else {
            f = sigmoid(a_f).cwiseProduct(sigmoid(r_f));
            i = sigmoid(a_i).cwiseProduct(sigmoid(r_i));
            o = sigmoid(a_o).cwiseProduct(sigmoid(r_o));
        }
    } else {
        f = sigmoid(a_f);
        i = sigmoid(a_i);
        o = sigmoid(a_o);
    }
    Vec g = a_g.array().tanh().matrix();

    CellState next;
    next.cell = f.cwiseProduct(state.cell) + i.cwiseProduct(g);
    Vec tanh_cell = next.cell.array().tanh().matrix();
    next.h = o.cwiseProduct(tanh_cell);

    if (cache) {
        cache->z = std::move(z);
        cache->a_f = std::move(a_f);
        cache->a_i = std::move(a_i);
        cache->a_o = std::move(a_o);
        cache->a_g = std::move(a_g);
        cache->r_f = std::move(r_f);
        cache->r_i = std::move(r_i);
        cache->r_o = std::move(r_o);
        cache->f = f;
        cache->i = i;
        cache->o = o;
        cache->g = std::move(g);
        cache->cell_prev = state.cell;
        cache->cell = next.cell;
        cache->tanh_cell = std::move(tanh_cell);
    }
    return next;
}

// Backward through one gate. Returns da and, when r/dr are live, fills dr.
void gate_backward(const Vec& dgate, const Vec& gate, const Vec& a, const Vec& r, GateMode mode,
                   bool has_control, Vec& da, Vec& dr) {
    if (!has_control) {
        da = dgate.cwiseProduct(gate.cwiseProduct(Vec::Ones(gate.size()) - gate));
        return;
    }
    if (mode == GateMode::ProductInsideSigmoid) {
        // gate = sigma(a .* r)
        const Vec du = dgate.cwiseProduct(gate.cwiseProduct(Vec::Ones(gate.size()) - gate));
        da = du.cwiseProduct(r);
        dr = du.cwiseProduct(a);
    } else {
        // gate = sigma(a) .* sigma(r)
        const Vec sa = sigmoid(a);
        const Vec sr = sigmoid(r);
        da = dgate.cwiseProduct(sr).cwiseProduct(sa.cwiseProduct(Vec::Ones(sa.size()) - sa));
        dr = dgate.cwiseProduct(sa).cwiseProduct(sr.cwiseProduct(Vec::Ones(sr.size()) - sr));
    }
}

struct StepGradSinks {
    LstmParams* content;
    GateControlParams* control; // null for plain LSTM
    Vec* dc;                    // null for plain LSTM
};

// One step of backpropagation. dh is the total gradient reaching h_t;
// dcell_io carries the cell-path gradient (in: from t+1, out: to t-1).
// Returns dh_prev; writes dx.
Vec step_backward(const LstmParams& p, const GateControlParams* cparams, const StepCache& s,
                  const Vec& c, GateMode mode, const Vec& dh, Vec& dcell_io, Vec& dx,
                  const StepGradSinks& sinks) {
    const int hidden = p.hidden();
    const bool has_control = sinks.control != nullptr;

    const Vec ones = Vec::Ones(hidden);
    const Vec dcell =
        dh.cwiseProduct(s.o).cwiseProduct(ones - s.tanh_cell.cwiseProduct(s.tanh_cell)) +
        dcell_io;
    const Vec dgate_o = dh.cwiseProduct(s.tanh_cell);
    const Vec dgate_f = dcell.cwiseProduct(s.cell_prev);
    const Vec dgate_i = dcell.cwiseProduct(s.g);
    const Vec dg = dcell.cwiseProduct(s.i);
    dcell_io = dcell.cwiseProduct(s.f);

    Vec da_f, da_i, da_o, dr_f, dr_i, dr_o;
    gate_backward(dgate_f, s.f, s.a_f, s.r_f, mode, has_control, da_f, dr_f);
    gate_backward(dgate_i, s.i, s.a_i, s.r_i, mode, has_control, da_i, dr_i);
    gate_backward(dgate_o, s.o, s.a_o, s.r_o, mode, has_control, da_o, dr_o);
    const Vec da_g = dg.cwiseProduct(ones - s.g.cwiseProduct(s.g));

    LstmParams& pg = *sinks.content;
    pg.w_f.noalias() += da_f * s.z.transpose();
    pg.w_i.noalias() += da_i * s.z.transpose();
    pg.w_o.noalias() += da_o * s.z.transpose();
    pg.w_g.noalias() += da_g * s.z.transpose();
    pg.b_f += da_f;
    pg.b_i += da_i;
    pg.b_o += da_o;
    pg.b_g += da_g;

    Vec dz = p.w_f.transpose() * da_f;
    dz.noalias() += p.w_i.transpose() * da_i;
    dz.noalias() += p.w_o.transpose() * da_o;
    dz.noalias() += p.w_g.transpose() * da_g;

    if (has_control) {
        GateControlParams& cg = *sinks.control;
        cg.w_cf.noalias() += dr_f * c.transpose();
        cg.w_ci.noalias() += dr_i * c.transpose();
        cg.w_co.noalias() += dr_o * c.transpose();
        cg.b_cf += dr_f;
        cg.b_ci += dr_i;
        cg.b_co += dr_o;
        sinks.dc->noalias() += cparams->w_cf.transpose() * dr_f;
        sinks.dc->noalias() += cparams->w_ci.transpose() * dr_i;
        sinks.dc->noalias() += cparams->w_co.transpose() * dr_o;
    }

    dx = dz.tail(dz.size() - hidden);
    return dz.head(hidden);
}

} // namespace

CellState lstm_step(const LstmParams& p, const CellState& state, const Vec& x) {
    check_step_dims(p, state, x);
    return step_forward(p, nullptr, Vec(), state, x, GateMode::ProductInsideSigmoid, nullptr);
}

CellState cglstm_step(const CglstmParams& p, const CellState& state, const Vec& x,
                      const ControlVector& c, GateMode mode) {
    check_step_dims(p.content, state, x);
    if (c.c.size() != p.control.control())
        throw xspc::ShapeError("control size " + std::to_string(c.c.size()) +
                               " does not match expected " +
                               std::to_string(p.control.control()));
    return step_forward(p.content, &p.control, c.c, state, x, mode, nullptr);
}

namespace {

SequenceForward run_forward(const LstmParams& p, const GateControlParams* control, const Vec& c,
                            const Mat& x_seq, const CellState& init, GateMode mode) {
    if (x_seq.rows() == 0) throw xspc::InputError("sequence forward: empty sequence");
    if (x_seq.cols() != p.input())
        throw xspc::ShapeError("sequence input width " + std::to_string(x_seq.cols()) +
                               " does not match expected " + std::to_string(p.input()));
    if (init.h.size() != p.hidden())
        throw xspc::ShapeError("initial state size " + std::to_string(init.h.size()) +
                               " does not match hidden size " + std::to_string(p.hidden()));

    const long T = x_seq.rows();
    SequenceForward out;
    out.h_seq.resize(T, p.hidden());
    out.tape.steps.resize(static_cast<std::size_t>(T));
    out.tape.init = init;
    out.tape.control = c;
    out.tape.mode = mode;
    out.tape.input_dim = p.input();

    CellState state = init;
    for (long t = 0; t < T; ++t) {
        const Vec x = x_seq.row(t).transpose();
        state = step_forward(p, control, c, state, x, mode,
                             &out.tape.steps[static_cast<std::size_t>(t)]);
        out.h_seq.row(t) = state.h.transpose();
    }
    return out;
}

} // namespace

SequenceForward lstm_forward(const LstmParams& p, const Mat& x_seq, const CellState& init) {
    return run_forward(p, nullptr, Vec(), x_seq, init, GateMode::ProductInsideSigmoid);
}

SequenceForward cglstm_forward(const CglstmParams& p, const Mat& x_seq, const ControlVector& c,
                               const CellState& init, GateMode mode) {
    if (c.c.size() != p.control.control())
        throw xspc::ShapeError("control size " + std::to_string(c.c.size()) +
                               " does not match expected " +
                               std::to_string(p.control.control()));
    return run_forward(p.content, &p.control, c.c, x_seq, init, mode);
}

namespace {

Mat replay_impl(const LstmParams& p, const GateControlParams* control, const SequenceTape& tape) {
    const long T = static_cast<long>(tape.steps.size());
    Mat h_seq(T, p.hidden());
    CellState state = tape.init;
    for (long t = 0; t < T; ++t) {
        const Vec x = tape.steps[static_cast<std::size_t>(t)].z.tail(tape.input_dim);
        state = step_forward(p, control, tape.control, state, x, tape.mode, nullptr);
        h_seq.row(t) = state.h.transpose();
    }
    return h_seq;
}

} // namespace

Mat replay_forward(const LstmParams& p, const SequenceTape& tape) {
    return replay_impl(p, nullptr, tape);
}

Mat replay_forward(const CglstmParams& p, const SequenceTape& tape) {
    return replay_impl(p.content, &p.control, tape);
}

namespace {

void check_backward_dims(const LstmParams& p, const SequenceTape& tape, const Mat& dh_seq) {
    if (static_cast<long>(tape.steps.size()) != dh_seq.rows())
        throw xspc::ShapeError("tape has " + std::to_string(tape.steps.size()) +
                               " steps but loss gradients have " + std::to_string(dh_seq.rows()));
    if (dh_seq.cols() != p.hidden())
        throw xspc::ShapeError("loss gradient width " + std::to_string(dh_seq.cols()) +
                               " does not match hidden size " + std::to_string(p.hidden()));
}

void run_backward(const LstmParams& p, const GateControlParams* cparams,
                  const SequenceTape& tape, const Mat& dh_seq, const StepGradSinks& sinks,
                  Mat& dx_seq, CellState& dinit) {
    const long T = static_cast<long>(tape.steps.size());
    dx_seq.resize(T, tape.input_dim);

    Vec dh_carry = Vec::Zero(p.hidden());
    Vec dcell_carry = Vec::Zero(p.hidden());
    Vec dx(tape.input_dim);
    for (long t = T - 1; t >= 0; --t) {
        const Vec dh = dh_seq.row(t).transpose() + dh_carry;
        dh_carry = step_backward(p, cparams, tape.steps[static_cast<std::size_t>(t)],
                                 tape.control, tape.mode, dh, dcell_carry, dx, sinks);
        dx_seq.row(t) = dx.transpose();
    }
    dinit.h = dh_carry;
    dinit.cell = dcell_carry;
}

} // namespace

LstmSeqGrads lstm_backward(const LstmParams& p, const SequenceTape& tape, const Mat& dh_seq) {
    check_backward_dims(p, tape, dh_seq);
    LstmSeqGrads g;
    g.params = LstmParams::zeros(p.hidden(), p.input());
    StepGradSinks sinks{&g.params, nullptr, nullptr};
    run_backward(p, nullptr, tape, dh_seq, sinks, g.dx_seq, g.dinit);
    return g;
}

CglstmSeqGrads cglstm_backward(const CglstmParams& p, const SequenceTape& tape,
                               const Mat& dh_seq) {
    check_backward_dims(p.content, tape, dh_seq);
    CglstmSeqGrads g;
    g.params = CglstmParams::zeros(p.content.hidden(), p.content.input(), p.control.control());
    g.dcontrol = Vec::Zero(p.control.control());
    StepGradSinks sinks{&g.params.content, &g.params.control, &g.dcontrol};
    run_backward(p.content, &p.control, tape, dh_seq, sinks, g.dx_seq, g.dinit);
    return g;
}

} // namespace xspc::nn

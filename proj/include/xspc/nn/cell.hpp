#pragma once

#include <vector>

#include "xspc/linalg.hpp"
#include "xspc/nn/params.hpp"

namespace xspc::nn {

struct CellState {
    Vec h;    // previous hidden state
    Vec cell; // memory state

    static CellState zeros(int hidden) { return {Vec::Zero(hidden), Vec::Zero(hidden)}; }
};

// How a gate combines its content preactivation a with its control
// preactivation r. ProductInsideSigmoid is sigma(a .* r); ProductOfSigmoids
// (sigma(a) .* sigma(r)) is the alternative reading, kept for ablation.
enum class GateMode { ProductInsideSigmoid, ProductOfSigmoids };

struct ControlVector {
    Vec c;
};

// Everything one step's backward pass needs.
struct StepCache {
    Vec z;                  // [h_prev, x]
    Vec a_f, a_i, a_o, a_g; // content preactivations
    Vec r_f, r_i, r_o;      // control preactivations (size 0 for plain LSTM)
    Vec f, i, o, g;         // gate values and candidate
    Vec cell_prev, cell, tanh_cell;
};

// Standard LSTM step: gates sigma(W[h,x]+b), candidate tanh, cell = f.*cell +
// i.*g, h = o.*tanh(cell).
CellState lstm_step(const LstmParams& p, const CellState& state, const Vec& x);

// Gated step with control re-weighted gates. With control weights at zero and
// control biases at one this reduces exactly to lstm_step. The candidate and
// the cell/hidden update never see the control vector.
CellState cglstm_step(const CglstmParams& p, const CellState& state, const Vec& x,
                      const ControlVector& c, GateMode mode = GateMode::ProductInsideSigmoid);

// Per-sequence record sufficient for an exact backward pass. Replaying the
// tape reproduces the forward outputs bit-exactly.
struct SequenceTape {
    std::vector<StepCache> steps;
    CellState init;
    Vec control; // size 0 for plain LSTM sequences
    GateMode mode = GateMode::ProductInsideSigmoid;
    int input_dim = 0;
};

struct SequenceForward {
    Mat h_seq; // T x hidden
    SequenceTape tape;
};

SequenceForward lstm_forward(const LstmParams& p, const Mat& x_seq, const CellState& init);
SequenceForward cglstm_forward(const CglstmParams& p, const Mat& x_seq, const ControlVector& c,
                               const CellState& init,
                               GateMode mode = GateMode::ProductInsideSigmoid);

// Recomputes h_seq from the tape's recorded inputs.
Mat replay_forward(const LstmParams& p, const SequenceTape& tape);
Mat replay_forward(const CglstmParams& p, const SequenceTape& tape);

struct LstmSeqGrads {
    LstmParams params;
    Mat dx_seq;
    CellState dinit;
};

struct CglstmSeqGrads {
    CglstmParams params;
    Mat dx_seq;
    Vec dcontrol;
    CellState dinit;
};

// Exact gradients of a scalar loss given dL/dh per step.
LstmSeqGrads lstm_backward(const LstmParams& p, const SequenceTape& tape, const Mat& dh_seq);
CglstmSeqGrads cglstm_backward(const CglstmParams& p, const SequenceTape& tape,
                               const Mat& dh_seq);

} // namespace xspc::nn

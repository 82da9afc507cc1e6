// Generated by tools/codegen/variational_terms.py. Do not edit by hand.
#pragma once

#include "biped/detail/quasi_polynomial.hpp"

namespace biped::detail {

inline const MonomialTable kH = {{
    // theta^0 omega^0
    TermList{
        {1.0, 0, 0.0, Trig::kOne, 0.0},
        {-0.5, 0, 1.0, Trig::kOne, 0.0},
        {-0.5, 0, -1.0, Trig::kOne, 0.0},
    },
    // theta^3 omega^0
    TermList{
        {-0.0026041666666666665, 0, -3.0, Trig::kOne, 0.0},
        {-0.0026041666666666665, 0, 3.0, Trig::kOne, 0.0},
        {0.0026041666666666665, 0, 1.0, Trig::kOne, 0.0},
        {0.0026041666666666665, 0, -1.0, Trig::kOne, 0.0},
        {-0.03125, 1, 1.0, Trig::kOne, 0.0},
        {0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
    // theta^2 omega^1
    TermList{
        {-0.0546875, 0, -1.0, Trig::kOne, 0.0},
        {-0.0078125, 0, 3.0, Trig::kOne, 0.0},
        {0.0078125, 0, -3.0, Trig::kOne, 0.0},
        {0.0546875, 0, 1.0, Trig::kOne, 0.0},
        {-0.03125, 1, 1.0, Trig::kOne, 0.0},
        {-0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
    // theta^1 omega^2
    TermList{
        {-0.0078125, 0, -3.0, Trig::kOne, 0.0},
        {-0.0078125, 0, 3.0, Trig::kOne, 0.0},
        {0.0078125, 0, 1.0, Trig::kOne, 0.0},
        {0.0078125, 0, -1.0, Trig::kOne, 0.0},
        {-0.03125, 1, -1.0, Trig::kOne, 0.0},
        {0.03125, 1, 1.0, Trig::kOne, 0.0},
    },
    // theta^0 omega^3
    TermList{
        {-0.0234375, 0, 1.0, Trig::kOne, 0.0},
        {-0.0026041666666666665, 0, 3.0, Trig::kOne, 0.0},
        {0.0026041666666666665, 0, -3.0, Trig::kOne, 0.0},
        {0.0234375, 0, -1.0, Trig::kOne, 0.0},
        {0.03125, 1, 1.0, Trig::kOne, 0.0},
        {0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
}};

inline const MonomialTable kHDot = {{
    // theta^0 omega^0
    TermList{
        {0.5, 0, -1.0, Trig::kOne, 0.0},
        {-0.5, 0, 1.0, Trig::kOne, 0.0},
    },
    // theta^3 omega^0
    TermList{
        {-0.028645833333333332, 0, 1.0, Trig::kOne, 0.0},
        {-0.0078125, 0, 3.0, Trig::kOne, 0.0},
        {0.0078125, 0, -3.0, Trig::kOne, 0.0},
        {0.028645833333333332, 0, -1.0, Trig::kOne, 0.0},
        {-0.03125, 1, 1.0, Trig::kOne, 0.0},
        {-0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
    // theta^2 omega^1
    TermList{
        {-0.0234375, 0, -3.0, Trig::kOne, 0.0},
        {-0.0234375, 0, 3.0, Trig::kOne, 0.0},
        {0.0234375, 0, 1.0, Trig::kOne, 0.0},
        {0.0234375, 0, -1.0, Trig::kOne, 0.0},
        {-0.03125, 1, 1.0, Trig::kOne, 0.0},
        {0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
    // theta^1 omega^2
    TermList{
        {-0.0390625, 0, -1.0, Trig::kOne, 0.0},
        {-0.0234375, 0, 3.0, Trig::kOne, 0.0},
        {0.0234375, 0, -3.0, Trig::kOne, 0.0},
        {0.0390625, 0, 1.0, Trig::kOne, 0.0},
        {0.03125, 1, 1.0, Trig::kOne, 0.0},
        {0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
    // theta^0 omega^3
    TermList{
        {-0.0078125, 0, -3.0, Trig::kOne, 0.0},
        {-0.0078125, 0, 3.0, Trig::kOne, 0.0},
        {0.0078125, 0, 1.0, Trig::kOne, 0.0},
        {0.0078125, 0, -1.0, Trig::kOne, 0.0},
        {-0.03125, 1, -1.0, Trig::kOne, 0.0},
        {0.03125, 1, 1.0, Trig::kOne, 0.0},
    },
}};

inline const MonomialTable kHDdot = {{
    // theta^0 omega^0
    TermList{
        {-0.5, 0, 1.0, Trig::kOne, 0.0},
        {-0.5, 0, -1.0, Trig::kOne, 0.0},
    },
    // theta^3 omega^0
    TermList{
        {-0.059895833333333336, 0, 1.0, Trig::kOne, 0.0},
        {-0.059895833333333336, 0, -1.0, Trig::kOne, 0.0},
        {-0.0234375, 0, -3.0, Trig::kOne, 0.0},
        {-0.0234375, 0, 3.0, Trig::kOne, 0.0},
        {-0.03125, 1, 1.0, Trig::kOne, 0.0},
        {0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
    // theta^2 omega^1
    TermList{
        {-0.0703125, 0, 3.0, Trig::kOne, 0.0},
        {-0.0078125, 0, 1.0, Trig::kOne, 0.0},
        {0.0078125, 0, -1.0, Trig::kOne, 0.0},
        {0.0703125, 0, -3.0, Trig::kOne, 0.0},
        {-0.03125, 1, 1.0, Trig::kOne, 0.0},
        {-0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
    // theta^1 omega^2
    TermList{
        {-0.0703125, 0, -3.0, Trig::kOne, 0.0},
        {-0.0703125, 0, 3.0, Trig::kOne, 0.0},
        {0.0703125, 0, 1.0, Trig::kOne, 0.0},
        {0.0703125, 0, -1.0, Trig::kOne, 0.0},
        {-0.03125, 1, -1.0, Trig::kOne, 0.0},
        {0.03125, 1, 1.0, Trig::kOne, 0.0},
    },
    // theta^0 omega^3
    TermList{
        {-0.0390625, 0, -1.0, Trig::kOne, 0.0},
        {-0.0234375, 0, 3.0, Trig::kOne, 0.0},
        {0.0234375, 0, -3.0, Trig::kOne, 0.0},
        {0.0390625, 0, 1.0, Trig::kOne, 0.0},
        {0.03125, 1, 1.0, Trig::kOne, 0.0},
        {0.03125, 1, -1.0, Trig::kOne, 0.0},
    },
}};

inline const MonomialTable kF = {{
    // theta^0 omega^0
    TermList{
        {0.5, 0, 0.0, Trig::kCos, 1.0},
        {-0.25, 0, 1.0, Trig::kOne, 0.0},
        {-0.25, 0, -1.0, Trig::kOne, 0.0},
    },
    // theta^3 omega^0
    TermList{
        {-0.272265625, 0, 0.0, Trig::kCos, 1.0},
        {-0.017578125, 0, 0.0, Trig::kCos, 3.0},
        {0.007291666666666667, 0, -3.0, Trig::kOne, 0.0},
        {0.007291666666666667, 0, 3.0, Trig::kOne, 0.0},
        {0.07552083333333333, 0, 1.0, Trig::kOne, 0.0},
        {0.07552083333333333, 0, -1.0, Trig::kOne, 0.0},
        {-0.076171875, 0, -2.0, Trig::kSin, 1.0},
        {-0.028125, 0, -1.0, Trig::kSin, 2.0},
        {-0.0140625, 0, 1.0, Trig::kCos, 2.0},
        {-0.0140625, 0, -1.0, Trig::kCos, 2.0},
        {-0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.0703125, 1, 0.0, Trig::kSin, 1.0},
        {0.028125, 0, 1.0, Trig::kSin, 2.0},
        {0.076171875, 0, -2.0, Trig::kCos, 1.0},
        {0.076171875, 0, 2.0, Trig::kCos, 1.0},
        {0.076171875, 0, 2.0, Trig::kSin, 1.0},
    },
    // theta^2 omega^1
    TermList{
        {-0.1015625, 0, -1.0, Trig::kOne, 0.0},
        {-0.021875, 0, -3.0, Trig::kOne, 0.0},
        {0.021875, 0, 3.0, Trig::kOne, 0.0},
        {0.017578125, 0, 0.0, Trig::kSin, 3.0},
        {0.1015625, 0, 1.0, Trig::kOne, 0.0},
        {0.496484375, 0, 0.0, Trig::kSin, 1.0},
        {-0.177734375, 0, -2.0, Trig::kCos, 1.0},
        {-0.0046875, 0, -1.0, Trig::kCos, 2.0},
        {-0.015625, 1, 1.0, Trig::kOne, 0.0},
        {-0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.0375, 0, 1.0, Trig::kSin, 2.0},
        {0.0375, 0, -1.0, Trig::kSin, 2.0},
        {0.0234375, 1, 0.0, Trig::kCos, 1.0},
        {0.0046875, 0, 1.0, Trig::kCos, 2.0},
        {0.126953125, 0, -2.0, Trig::kSin, 1.0},
        {0.126953125, 0, 2.0, Trig::kSin, 1.0},
        {0.177734375, 0, 2.0, Trig::kCos, 1.0},
    },
    // theta^1 omega^2
    TermList{
        {-0.359765625, 0, 0.0, Trig::kCos, 1.0},
        {0.0078125, 0, 1.0, Trig::kOne, 0.0},
        {0.0078125, 0, -1.0, Trig::kOne, 0.0},
        {0.005859375, 0, 0.0, Trig::kCos, 3.0},
        {0.021875, 0, -3.0, Trig::kOne, 0.0},
        {0.021875, 0, 3.0, Trig::kOne, 0.0},
        {-0.025390625, 0, -2.0, Trig::kSin, 1.0},
        {-0.015625, 1, -1.0, Trig::kOne, 0.0},
        {-0.00625, 0, -1.0, Trig::kSin, 2.0},
        {0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.00625, 0, 1.0, Trig::kSin, 2.0},
        {0.025390625, 0, 2.0, Trig::kSin, 1.0},
        {0.0203125, 0, 1.0, Trig::kCos, 2.0},
        {0.0203125, 0, -1.0, Trig::kCos, 2.0},
        {0.1640625, 1, 0.0, Trig::kSin, 1.0},
        {0.126953125, 0, -2.0, Trig::kCos, 1.0},
        {0.126953125, 0, 2.0, Trig::kCos, 1.0},
    },
    // theta^0 omega^3
    TermList{
        {-0.153515625, 0, 0.0, Trig::kSin, 1.0},
        {-0.007291666666666667, 0, -3.0, Trig::kOne, 0.0},
        {-0.0078125, 0, 1.0, Trig::kOne, 0.0},
        {-0.0006510416666666666, 0, 0.0, Trig::kSin, 3.0},
        {0.0078125, 0, -1.0, Trig::kOne, 0.0},
        {0.007291666666666667, 0, 3.0, Trig::kOne, 0.0},
        {-0.025390625, 0, -2.0, Trig::kCos, 1.0},
        {-0.025390625, 0, -2.0, Trig::kSin, 1.0},
        {-0.025390625, 0, 2.0, Trig::kSin, 1.0},
        {-0.003125, 0, 1.0, Trig::kSin, 2.0},
        {-0.003125, 0, -1.0, Trig::kSin, 2.0},
        {-0.0015625, 0, -1.0, Trig::kCos, 2.0},
        {0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.0015625, 0, 1.0, Trig::kCos, 2.0},
        {0.0546875, 1, 0.0, Trig::kCos, 1.0},
        {0.025390625, 0, 2.0, Trig::kCos, 1.0},
    },
}};

inline const MonomialTable kFDot = {{
    // theta^0 omega^0
    TermList{
        {-0.5, 0, 0.0, Trig::kSin, 1.0},
        {-0.25, 0, 1.0, Trig::kOne, 0.0},
        {0.25, 0, -1.0, Trig::kOne, 0.0},
    },
    // theta^3 omega^0
    TermList{
        {-0.059895833333333336, 0, -1.0, Trig::kOne, 0.0},
        {-0.021875, 0, -3.0, Trig::kOne, 0.0},
        {0.021875, 0, 3.0, Trig::kOne, 0.0},
        {0.059895833333333336, 0, 1.0, Trig::kOne, 0.0},
        {0.052734375, 0, 0.0, Trig::kSin, 3.0},
        {0.342578125, 0, 0.0, Trig::kSin, 1.0},
        {-0.228515625, 0, -2.0, Trig::kCos, 1.0},
        {-0.0421875, 0, -1.0, Trig::kCos, 2.0},
        {-0.015625, 1, 1.0, Trig::kOne, 0.0},
        {-0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.0703125, 1, 0.0, Trig::kCos, 1.0},
        {0.05625, 0, 1.0, Trig::kSin, 2.0},
        {0.05625, 0, -1.0, Trig::kSin, 2.0},
        {0.0421875, 0, 1.0, Trig::kCos, 2.0},
        {0.076171875, 0, -2.0, Trig::kSin, 1.0},
        {0.076171875, 0, 2.0, Trig::kSin, 1.0},
        {0.228515625, 0, 2.0, Trig::kCos, 1.0},
    },
    // theta^2 omega^1
    TermList{
        {0.0859375, 0, 1.0, Trig::kOne, 0.0},
        {0.0859375, 0, -1.0, Trig::kOne, 0.0},
        {0.065625, 0, -3.0, Trig::kOne, 0.0},
        {0.065625, 0, 3.0, Trig::kOne, 0.0},
        {0.052734375, 0, 0.0, Trig::kCos, 3.0},
        {0.519921875, 0, 0.0, Trig::kCos, 1.0},
        {-0.076171875, 0, -2.0, Trig::kSin, 1.0},
        {-0.028125, 0, -1.0, Trig::kSin, 2.0},
        {-0.0234375, 1, 0.0, Trig::kSin, 1.0},
        {-0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.028125, 0, 1.0, Trig::kSin, 2.0},
        {0.076171875, 0, 2.0, Trig::kSin, 1.0},
        {0.0796875, 0, 1.0, Trig::kCos, 2.0},
        {0.0796875, 0, -1.0, Trig::kCos, 2.0},
        {0.482421875, 0, -2.0, Trig::kCos, 1.0},
        {0.482421875, 0, 2.0, Trig::kCos, 1.0},
    },
    // theta^1 omega^2
    TermList{
        {-0.065625, 0, -3.0, Trig::kOne, 0.0},
        {-0.017578125, 0, 0.0, Trig::kSin, 3.0},
        {-0.0234375, 0, -1.0, Trig::kOne, 0.0},
        {0.0234375, 0, 1.0, Trig::kOne, 0.0},
        {0.065625, 0, 3.0, Trig::kOne, 0.0},
        {0.523828125, 0, 0.0, Trig::kSin, 1.0},
        {-0.279296875, 0, -2.0, Trig::kCos, 1.0},
        {-0.076171875, 0, -2.0, Trig::kSin, 1.0},
        {-0.076171875, 0, 2.0, Trig::kSin, 1.0},
        {-0.0328125, 0, -1.0, Trig::kCos, 2.0},
        {-0.034375, 0, 1.0, Trig::kSin, 2.0},
        {-0.034375, 0, -1.0, Trig::kSin, 2.0},
        {0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.1640625, 1, 0.0, Trig::kCos, 1.0},
        {0.0328125, 0, 1.0, Trig::kCos, 2.0},
        {0.279296875, 0, 2.0, Trig::kCos, 1.0},
    },
    // theta^0 omega^3
    TermList{
        {-0.098828125, 0, 0.0, Trig::kCos, 1.0},
        {-0.001953125, 0, 0.0, Trig::kCos, 3.0},
        {0.0078125, 0, 1.0, Trig::kOne, 0.0},
        {0.0078125, 0, -1.0, Trig::kOne, 0.0},
        {0.021875, 0, -3.0, Trig::kOne, 0.0},
        {0.021875, 0, 3.0, Trig::kOne, 0.0},
        {-0.076171875, 0, 2.0, Trig::kSin, 1.0},
        {-0.0546875, 1, 0.0, Trig::kSin, 1.0},
        {-0.0046875, 0, 1.0, Trig::kCos, 2.0},
        {-0.0046875, 0, -1.0, Trig::kCos, 2.0},
        {-0.015625, 1, -1.0, Trig::kOne, 0.0},
        {-0.00625, 0, 1.0, Trig::kSin, 2.0},
        {0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.00625, 0, -1.0, Trig::kSin, 2.0},
        {0.025390625, 0, -2.0, Trig::kCos, 1.0},
        {0.025390625, 0, 2.0, Trig::kCos, 1.0},
        {0.076171875, 0, -2.0, Trig::kSin, 1.0},
    },
}};

inline const MonomialTable kFDdot = {{
    // theta^0 omega^0
    TermList{
        {-0.5, 0, 0.0, Trig::kCos, 1.0},
        {-0.25, 0, 1.0, Trig::kOne, 0.0},
        {-0.25, 0, -1.0, Trig::kOne, 0.0},
    },
    // theta^3 omega^0
    TermList{
        {0.044270833333333336, 0, 1.0, Trig::kOne, 0.0},
        {0.044270833333333336, 0, -1.0, Trig::kOne, 0.0},
        {0.065625, 0, -3.0, Trig::kOne, 0.0},
        {0.065625, 0, 3.0, Trig::kOne, 0.0},
        {0.158203125, 0, 0.0, Trig::kCos, 3.0},
        {0.412890625, 0, 0.0, Trig::kCos, 1.0},
        {-0.076171875, 0, 2.0, Trig::kSin, 1.0},
        {-0.0703125, 1, 0.0, Trig::kSin, 1.0},
        {-0.028125, 0, 1.0, Trig::kSin, 2.0},
        {-0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.028125, 0, -1.0, Trig::kSin, 2.0},
        {0.076171875, 0, -2.0, Trig::kSin, 1.0},
        {0.1546875, 0, 1.0, Trig::kCos, 2.0},
        {0.1546875, 0, -1.0, Trig::kCos, 2.0},
        {0.533203125, 0, -2.0, Trig::kCos, 1.0},
        {0.533203125, 0, 2.0, Trig::kCos, 1.0},
    },
    // theta^2 omega^1
    TermList{
        {-0.543359375, 0, 0.0, Trig::kSin, 1.0},
        {-0.158203125, 0, 0.0, Trig::kSin, 3.0},
        {-0.196875, 0, -3.0, Trig::kOne, 0.0},
        {-0.0703125, 0, -1.0, Trig::kOne, 0.0},
        {0.0703125, 0, 1.0, Trig::kOne, 0.0},
        {0.196875, 0, 3.0, Trig::kOne, 0.0},
        {-1.041015625, 0, -2.0, Trig::kCos, 1.0},
        {-0.330078125, 0, -2.0, Trig::kSin, 1.0},
        {-0.330078125, 0, 2.0, Trig::kSin, 1.0},
        {-0.1359375, 0, -1.0, Trig::kCos, 2.0},
        {-0.13125, 0, 1.0, Trig::kSin, 2.0},
        {-0.13125, 0, -1.0, Trig::kSin, 2.0},
        {-0.0234375, 1, 0.0, Trig::kCos, 1.0},
        {-0.015625, 1, 1.0, Trig::kOne, 0.0},
        {-0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.1359375, 0, 1.0, Trig::kCos, 2.0},
        {1.041015625, 0, 2.0, Trig::kCos, 1.0},
    },
    // theta^1 omega^2
    TermList{
        {-0.052734375, 0, 0.0, Trig::kCos, 3.0},
        {0.0390625, 0, 1.0, Trig::kOne, 0.0},
        {0.0390625, 0, -1.0, Trig::kOne, 0.0},
        {0.196875, 0, -3.0, Trig::kOne, 0.0},
        {0.196875, 0, 3.0, Trig::kOne, 0.0},
        {0.687890625, 0, 0.0, Trig::kCos, 1.0},
        {-0.431640625, 0, 2.0, Trig::kSin, 1.0},
        {-0.0359375, 0, 1.0, Trig::kCos, 2.0},
        {-0.0359375, 0, -1.0, Trig::kCos, 2.0},
        {-0.1640625, 1, 0.0, Trig::kSin, 1.0},
        {-0.1, 0, 1.0, Trig::kSin, 2.0},
        {-0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.1, 0, -1.0, Trig::kSin, 2.0},
        {0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.431640625, 0, -2.0, Trig::kSin, 1.0},
        {0.482421875, 0, -2.0, Trig::kCos, 1.0},
        {0.482421875, 0, 2.0, Trig::kCos, 1.0},
    },
    // theta^0 omega^3
    TermList{
        {-0.065625, 0, -3.0, Trig::kOne, 0.0},
        {-0.0234375, 0, -1.0, Trig::kOne, 0.0},
        {0.0234375, 0, 1.0, Trig::kOne, 0.0},
        {0.005859375, 0, 0.0, Trig::kSin, 3.0},
        {0.065625, 0, 3.0, Trig::kOne, 0.0},
        {0.044140625, 0, 0.0, Trig::kSin, 1.0},
        {-0.177734375, 0, -2.0, Trig::kSin, 1.0},
        {-0.177734375, 0, 2.0, Trig::kSin, 1.0},
        {-0.025390625, 0, 2.0, Trig::kCos, 1.0},
        {-0.0171875, 0, 1.0, Trig::kCos, 2.0},
        {-0.0546875, 1, 0.0, Trig::kCos, 1.0},
        {0.015625, 1, 1.0, Trig::kOne, 0.0},
        {0.015625, 1, -1.0, Trig::kOne, 0.0},
        {0.003125, 0, 1.0, Trig::kSin, 2.0},
        {0.003125, 0, -1.0, Trig::kSin, 2.0},
        {0.0171875, 0, -1.0, Trig::kCos, 2.0},
        {0.025390625, 0, -2.0, Trig::kCos, 1.0},
    },
}};

}  // namespace biped::detail

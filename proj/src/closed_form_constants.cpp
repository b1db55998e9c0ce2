#include "vgph/closed_form.hpp"

namespace vgph {

namespace {

ClosedFormConstants make_defaults() {
    ClosedFormConstants k;
    k.coefficients = {-0.0023, 0.2460, -0.1049, -0.0400, -0.0007, 0.5098, -0.6009, 0.8583, 0.3299, -0.0764};
    k.basis[0].g.m = {-3.5709, -3.0858, -2.7680, -3.0858, -3.0346, -3.0692, -2.7680, -3.0692, -4.2937};
    k.basis[0].f.m = {2.7021, 3.2914, 2.3884, 3.2914, 3.3876, 2.8077, 2.3884, 2.8077, 2.8905};
    k.basis[1].g.m = {-25.6104, -31.8796, -21.5908, -31.8796, -30.5056, -22.2121, -21.5908, -22.2121, -28.0164};
    k.basis[1].f.m = {32.0154, 35.4956, 20.6083, 35.4956, 29.8806, 30.5352, 20.6083, 30.5352, 31.7193};
    k.basis[2].g.m = {-9.2866, -6.4438, -10.5787, -6.4438, -6.4369, -5.4972, -10.5787, -5.4972, -8.4430};
    k.basis[2].f.m = {8.2153, 7.9086, 7.8492, 7.9086, 6.0971, 5.9908, 7.8492, 5.9908, 9.3168};
    k.basis[3].g.m = {-14.8512, -15.3252, -13.8140, -15.3252, -11.2078, -11.7173, -13.8140, -11.7173, -13.0263};
    k.basis[3].f.m = {16.6632, 9.6823, 12.9011, 9.6823, 27.8775, 15.5748, 12.9011, 15.5748, 23.0473};
    k.basis[4].g.m = {-54.1672, -26.9697, -23.7045, -26.9697, -43.5902, -36.9865, -23.7045, -36.9865, -30.1412};
    k.basis[4].f.m = {27.5052, 57.6332, 33.7410, 57.6332, 53.5055, 38.4958, 33.7410, 38.4958, 55.2717};
    k.basis[5].g.m = {-119.1511, -78.0652, -112.3875, -78.0652, -186.4133, -80.4339, -112.3875, -80.4339, -116.5743};
    k.basis[5].f.m = {195.0304, 143.0951, 108.0702, 143.0951, 92.4415, 169.8799, 108.0702, 169.8799, 135.2173};
    k.basis[6].g.m = {-737.6056, -1038.4397, -640.3922, -1038.4397, -963.7453, -551.0073, -640.3922, -551.0073, -537.7603};
    k.basis[6].f.m = {780.8498, 970.6533, 540.2198, 970.6533, 808.6133, 523.5790, 540.2198, 523.5790, 924.0598};
    k.basis[7].g.m = {-496.1792, -376.4132, -245.1099, -376.4132, -341.9391, -345.2818, -245.1099, -345.2818, -405.4714};
    k.basis[7].f.m = {390.7658, 778.0012, 298.8682, 778.0012, 658.3773, 509.5283, 298.8682, 509.5283, 444.1750};
    k.basis[8].g.m = {-526.6148, -345.7790, -276.1035, -345.7790, -188.0288, -293.5551, -276.1035, -293.5551, -339.0242};
    k.basis[8].f.m = {381.9239, 194.5271, 578.1185, 194.5271, 197.7692, 170.3597, 578.1185, 170.3597, 598.0897};
    k.basis[9].g.m = {-595.3592, -1679.5692, -922.0738, -1679.5692, -1466.6689, -674.1032, -922.0738, -674.1032, -1079.9475};
    k.basis[9].f.m = {1335.8832, 1173.0048, 438.1600, 1173.0047, 1126.0351, 671.8583, 438.1600, 671.8582, 662.4745};
    k.output.g.m = {-26.9693, -13.2321, -12.5971, -13.2321, -26.0595, -17.4419, -12.5971, -17.4419, -24.2304};
    k.output.f.m = {19.1816, 23.7427, 17.5106, 23.7427, 27.9531, 25.3751, 17.5106, 25.3751, 20.1042};
    return k;
}
}  // namespace

const ClosedFormConstants& ship_defaults() {
    static const ClosedFormConstants k = make_defaults();
    return k;
}

}  // namespace vgph

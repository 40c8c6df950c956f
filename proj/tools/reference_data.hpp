#pragma once

// Published reference values the verify harness reproduces. Sources are the
// tabulations that accompany the algorithms this library implements; entries
// are kept verbatim (13 respectively 5 printed digits).

#include <array>

namespace prolate_verify {

// Quadrature weights for c = 40, n = 41; one-based index j = 1..21 covers
// the lower half, the rest follows by symmetry. lambda = i * 0.69857E-08.
struct WeightRow {
    int j;
    double w;
};
inline constexpr std::array<WeightRow, 21> kWeights40_41 = {{
    {1, 0.7602931556894e-02},  {2, 0.1716167229714e-01},
    {3, 0.2563684665002e-01},  {4, 0.3278512460580e-01},
    {5, 0.3863462966166e-01},  {6, 0.4334940472363e-01},
    {7, 0.4713107235981e-01},  {8, 0.5016785516291e-01},
    {9, 0.5261660773966e-01},  {10, 0.5460119701692e-01},
    {11, 0.5621699326080e-01}, {12, 0.5753664411864e-01},
    {13, 0.5861531690539e-01}, {14, 0.5949490764741e-01},
    {15, 0.6020725336886e-01}, {16, 0.6077650804037e-01},
    {17, 0.6122088420703e-01}, {18, 0.6155390478472e-01},
    {19, 0.6178529976346e-01}, {20, 0.6192162112196e-01},
    {21, 0.6196665001384e-01},
}};
inline constexpr double kLambda40_41 = 0.69857e-08;

// Quadrature errors for c = 50, n = 40 (|lambda_40| = 0.12915E-03):
// even m, the exact integral lambda_m psi_m(0), and the double-precision
// quadrature error delta_n(psi_m).
struct DeltaRow {
    int m;
    double lambda_psi0;
    double delta;
};
inline constexpr std::array<DeltaRow, 20> kDelta50_40 = {{
    {0, 0.70669e+00, 0.44409e-15},  {2, 0.49581e+00, 0.16653e-15},
    {4, 0.42581e+00, 0.13323e-14},  {6, 0.38527e+00, 0.21649e-14},
    {8, 0.35695e+00, 0.22760e-14},  {10, 0.33516e+00, 0.16653e-14},
    {12, 0.31730e+00, 0.23870e-14}, {14, 0.30201e+00, 0.24980e-14},
    {16, 0.28844e+00, 0.11102e-14}, {18, 0.27604e+00, 0.59230e-13},
    {20, 0.26435e+00, 0.83716e-12}, {22, 0.25299e+00, 0.89038e-11},
    {24, 0.24150e+00, 0.76862e-10}, {26, 0.22919e+00, 0.65870e-09},
    {28, 0.21377e+00, 0.45239e-08}, {30, 0.18075e+00, 0.19826e-07},
    {32, 0.10038e+00, 0.68548e-07}, {34, 0.27988e-01, 0.33810e-06},
    {36, 0.49822e-02, 0.27232e-05}, {38, 0.70503e-03, 0.22754e-04},
}};
inline constexpr double kLambda50_40 = 0.12915e-03;

// Order-selection table: for each (c, eps) the four selectors and the
// eigenvalue magnitudes paired with n1 (at index n1+1) and n2 (at n2).
struct NSelectRow {
    double c;
    double eps;
    int n1, n2, n3, n4;
    double lam_n1, lam_n2;
};
inline constexpr std::array<NSelectRow, 18> kNSelect = {{
    {250.0, 1e-10, 184, 198, 277, 303, 0.60576e-10, 0.86791e-16},
    {250.0, 1e-25, 216, 227, 326, 386, 0.31798e-25, 0.14863e-30},
    {250.0, 1e-50, 260, 270, 393, 525, 0.28910e-50, 0.75155e-56},
    {500.0, 1e-10, 346, 362, 460, 488, 0.49076e-10, 0.60092e-16},
    {500.0, 1e-25, 382, 397, 520, 583, 0.54529e-25, 0.19622e-31},
    {500.0, 1e-50, 433, 446, 607, 742, 0.82391e-50, 0.38217e-56},
    {1000.0, 1e-10, 666, 687, 803, 834, 0.95582e-10, 0.92947e-17},
    {1000.0, 1e-25, 707, 725, 875, 942, 0.97844e-25, 0.14241e-31},
    {1000.0, 1e-50, 767, 783, 981, 1120, 0.39772e-50, 0.56698e-57},
    {2000.0, 1e-10, 1305, 1330, 1467, 1500, 0.95177e-10, 0.25349e-17},
    {2000.0, 1e-25, 1351, 1373, 1550, 1619, 0.86694e-25, 0.27321e-32},
    {2000.0, 1e-50, 1418, 1438, 1675, 1818, 0.88841e-50, 0.22795e-57},
    {4000.0, 1e-10, 2581, 2610, 2768, 2804, 0.70386e-10, 0.64396e-18},
    {4000.0, 1e-25, 2632, 2658, 2862, 2935, 0.57213e-25, 0.53827e-33},
    {4000.0, 1e-50, 2707, 2730, 3007, 3154, 0.56712e-50, 0.88819e-58},
    {8000.0, 1e-10, 5130, 5163, 5344, 5383, 0.59447e-10, 0.22821e-18},
    {8000.0, 1e-25, 5185, 5216, 5450, 5526, 0.87242e-25, 0.16237e-33},
    {8000.0, 1e-50, 5268, 5296, 5614, 5765, 0.95784e-50, 0.23927e-58},
}};

// Isolated eigenvalue magnitudes quoted with plots and tables.
struct LambdaAnchor {
    double c;
    int n;
    double magnitude;
};
inline constexpr std::array<LambdaAnchor, 4> kLambdaAnchors = {{
    {50.0, 40, 1.2915e-4},
    {40.0, 41, 6.9857e-9},
    {1000.0, 682, 6.0352e-16},
    {10000.0, 6393, 4.3299e-8},
}};

}  // namespace prolate_verify

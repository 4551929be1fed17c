#pragma once

// Arrays and correlation tables transcribed verbatim from the worked examples.
// Tables: rows u1 = -3..3, columns u2 = -7..7. The two cross tables are kept as
// printed, including the sign slip at (u1, u2) = (1, -5).

#include <array>

namespace golden {

inline constexpr std::array<std::array<int, 8>, 4> anf_q4_f{{
    {0, 0, 2, 2, 0, 3, 2, 1},
    {2, 2, 0, 0, 2, 1, 0, 3},
    {1, 1, 3, 3, 1, 0, 3, 2},
    {3, 3, 1, 1, 3, 2, 1, 0},
}};

inline constexpr std::array<std::array<int, 8>, 4> basic_q4_c{{
    {0, 1, 0, 3, 0, 3, 0, 1},
    {0, 1, 2, 1, 0, 3, 2, 3},
    {0, 1, 0, 3, 0, 3, 0, 1},
    {2, 3, 0, 3, 2, 1, 0, 1},
}};

inline constexpr std::array<std::array<int, 8>, 4> basic_q4_d{{
    {0, 1, 0, 3, 2, 1, 2, 3},
    {0, 1, 2, 1, 2, 1, 0, 1},
    {0, 1, 0, 3, 2, 1, 2, 3},
    {2, 3, 0, 3, 0, 3, 2, 3},
}};

inline constexpr std::array<std::array<int, 8>, 4> path_q2_c{{
    {0, 0, 0, 1, 0, 0, 0, 1},
    {0, 0, 0, 1, 1, 1, 1, 0},
    {0, 0, 1, 0, 0, 0, 1, 0},
    {1, 1, 0, 1, 0, 0, 1, 0},
}};

inline constexpr std::array<std::array<int, 8>, 4> path_q2_d{{
    {0, 1, 0, 0, 0, 1, 0, 0},
    {0, 1, 0, 0, 1, 0, 1, 1},
    {0, 1, 1, 1, 0, 1, 1, 1},
    {1, 0, 0, 0, 0, 1, 1, 1},
}};

inline constexpr std::array<std::array<int, 8>, 4> mate_q2_c_prime{{
    {0, 0, 0, 1, 1, 1, 1, 0},
    {0, 0, 0, 1, 0, 0, 0, 1},
    {0, 0, 1, 0, 1, 1, 0, 1},
    {1, 1, 0, 1, 1, 1, 0, 1},
}};

inline constexpr std::array<std::array<int, 8>, 4> mate_q2_d_prime{{
    {0, 1, 0, 0, 1, 0, 1, 1},
    {0, 1, 0, 0, 0, 1, 0, 0},
    {0, 1, 1, 1, 1, 0, 0, 0},
    {1, 0, 0, 0, 1, 0, 0, 0},
}};

inline constexpr std::array<std::array<int, 8>, 4> set_q2_f{{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 1, 0, 1, 0, 1},
    {0, 0, 1, 1, 1, 1, 0, 0},
    {0, 1, 1, 0, 1, 0, 0, 1},
}};

inline constexpr std::array<std::array<int, 8>, 4> set_q2_f_z4{{
    {0, 0, 1, 1, 0, 0, 1, 1},
    {0, 1, 1, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 1, 1, 1, 1},
    {0, 1, 0, 1, 1, 0, 1, 0},
}};

inline constexpr std::array<std::array<int, 8>, 4> set_q2_f_z1{{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 1, 0, 1, 0},
    {0, 0, 1, 1, 1, 1, 0, 0},
    {1, 0, 0, 1, 0, 1, 1, 0},
}};

inline constexpr std::array<std::array<int, 8>, 4> set_q2_f_z4_z1{{
    {0, 0, 1, 1, 0, 0, 1, 1},
    {1, 0, 0, 1, 1, 0, 0, 1},
    {0, 0, 0, 0, 1, 1, 1, 1},
    {1, 0, 1, 0, 0, 1, 0, 1},
}};

inline constexpr std::array<std::array<int, 15>, 7> path_q2_auto_c{{
    {  1,   0,   1,   0,   3,   0,  -1,   0,  -1,   0,  -1,   0,  -3,   0,   1},
    {  2,   0,   2,   0,   6,   0,  -2,   0,   2,   0,   2,   0,   6,   0,  -2},
    {  3,   0,  -1,   0,   1,   0,   1,   0,  -3,   0,   1,   0,  -1,   0,  -1},
    {  0,   0,   0,   0,   0,   0,   0,  32,   0,   0,   0,   0,   0,   0,   0},
    { -1,   0,  -1,   0,   1,   0,  -3,   0,   1,   0,   1,   0,  -1,   0,   3},
    { -2,   0,   6,   0,   2,   0,   2,   0,  -2,   0,   6,   0,   2,   0,   2},
    {  1,   0,  -3,   0,  -1,   0,  -1,   0,  -1,   0,   3,   0,   1,   0,   1},
}};

inline constexpr std::array<std::array<int, 15>, 7> path_q2_auto_d{{
    { -1,   0,  -1,   0,  -3,   0,   1,   0,   1,   0,   1,   0,   3,   0,  -1},
    { -2,   0,  -2,   0,  -6,   0,   2,   0,  -2,   0,  -2,   0,  -6,   0,   2},
    { -3,   0,   1,   0,  -1,   0,  -1,   0,   3,   0,  -1,   0,   1,   0,   1},
    {  0,   0,   0,   0,   0,   0,   0,  32,   0,   0,   0,   0,   0,   0,   0},
    {  1,   0,   1,   0,  -1,   0,   3,   0,  -1,   0,  -1,   0,   1,   0,  -3},
    {  2,   0,  -6,   0,  -2,   0,  -2,   0,   2,   0,  -6,   0,  -2,   0,  -2},
    { -1,   0,   3,   0,   1,   0,   1,   0,   1,   0,  -3,   0,  -1,   0,  -1},
}};

inline constexpr std::array<std::array<int, 15>, 7> mate_q2_cross_c{{
    { -1,   0,  -1,   0,  -5,   0,  -1,   0,  -7,   0,   1,   0,  -3,   0,   1},
    { -2,   0,  -2,   0,  -6,   0,   2,   0,   2,   0,   2,   0,   6,   0,  -2},
    { -3,   0,   1,   0,  -3,   0,   5,   0,   7,   0,  -5,   0,  -1,   0,  -1},
    {  0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0},
    {  1,   0,  -1,   0,  -7,   0,  13,   0,   7,   0,  -1,   0,  -1,   0,   3},
    {  2,   0,  -6,   0,  -2,   0,  -2,   0,  -2,   0,   6,   0,   2,   0,   2},
    { -1,   0,   3,   0,   3,   0,  -5,   0,  -3,   0,   1,   0,   1,   0,   1},
}};

inline constexpr std::array<std::array<int, 15>, 7> mate_q2_cross_d{{
    {  1,   0,   1,   0,   5,   0,   1,   0,   7,   0,  -1,   0,   3,   0,  -1},
    {  2,   0,   2,   0,   6,   0,  -2,   0,  -2,   0,  -2,   0,  -6,   0,   2},
    {  3,   0,  -1,   0,   3,   0,  -5,   0,  -7,   0,   5,   0,   1,   0,   1},
    {  0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0},
    { -1,   0,   1,   0,   7,   0, -13,   0,  -7,   0,   1,   0,   1,   0,  -3},
    { -2,   0,   6,   0,   2,   0,   2,   0,   2,   0,  -6,   0,  -2,   0,  -2},
    {  1,   0,  -3,   0,  -3,   0,   5,   0,   3,   0,  -1,   0,  -1,   0,  -1},
}};

inline constexpr std::array<std::array<int, 15>, 7> set_q2_auto_f1{{
    { -1,   0,   1,   0,   1,   0,  -1,   0,   1,   0,  -1,   0,  -1,   0,   1},
    {  0,   4,   0,   0,   0,  -4,   0,   0,   0,  -4,   0,   0,   0,   4,   0},
    { -1,   0,   1,   0,  -3,   0,  -5,   0,   5,   0,   3,   0,  -1,   0,   1},
    {  0,   8,   0,   0,   0,   8,   0,  32,   0,   8,   0,   0,   0,   8,   0},
    {  1,   0,  -1,   0,   3,   0,   5,   0,  -5,   0,  -3,   0,   1,   0,  -1},
    {  0,   4,   0,   0,   0,  -4,   0,   0,   0,  -4,   0,   0,   0,   4,   0},
    {  1,   0,  -1,   0,  -1,   0,   1,   0,  -1,   0,   1,   0,   1,   0,  -1},
}};

inline constexpr std::array<std::array<int, 15>, 7> set_q2_auto_f2{{
    {  1,   0,  -1,   0,  -1,   0,   1,   0,  -1,   0,   1,   0,   1,   0,  -1},
    {  0,  -4,   0,   0,   0,   4,   0,   0,   0,   4,   0,   0,   0,  -4,   0},
    {  1,   0,  -1,   0,   3,   0, -11,   0,  11,   0,  -3,   0,   1,   0,  -1},
    {  0,  -8,   0,   0,   0,  -8,   0,  32,   0,  -8,   0,   0,   0,  -8,   0},
    { -1,   0,   1,   0,  -3,   0,  11,   0, -11,   0,   3,   0,  -1,   0,   1},
    {  0,  -4,   0,   0,   0,   4,   0,   0,   0,   4,   0,   0,   0,  -4,   0},
    { -1,   0,   1,   0,   1,   0,  -1,   0,   1,   0,  -1,   0,  -1,   0,   1},
}};

inline constexpr std::array<std::array<int, 15>, 7> set_q2_auto_f3{{
    {  1,   0,  -1,   0,  -1,   0,   1,   0,  -1,   0,   1,   0,   1,   0,  -1},
    {  0,   4,   0,   0,   0,  -4,   0,   0,   0,  -4,   0,   0,   0,   4,   0},
    {  1,   0,  -1,   0,   3,   0,   5,   0,  -5,   0,  -3,   0,   1,   0,  -1},
    {  0,   8,   0,   0,   0,   8,   0,  32,   0,   8,   0,   0,   0,   8,   0},
    { -1,   0,   1,   0,  -3,   0,  -5,   0,   5,   0,   3,   0,  -1,   0,   1},
    {  0,   4,   0,   0,   0,  -4,   0,   0,   0,  -4,   0,   0,   0,   4,   0},
    { -1,   0,   1,   0,   1,   0,  -1,   0,   1,   0,  -1,   0,  -1,   0,   1},
}};

inline constexpr std::array<std::array<int, 15>, 7> set_q2_auto_f4{{
    { -1,   0,   1,   0,   1,   0,  -1,   0,   1,   0,  -1,   0,  -1,   0,   1},
    {  0,  -4,   0,   0,   0,   4,   0,   0,   0,   4,   0,   0,   0,  -4,   0},
    { -1,   0,   1,   0,  -3,   0,  11,   0, -11,   0,   3,   0,  -1,   0,   1},
    {  0,  -8,   0,   0,   0,  -8,   0,  32,   0,  -8,   0,   0,   0,  -8,   0},
    {  1,   0,  -1,   0,   3,   0, -11,   0,  11,   0,  -3,   0,   1,   0,  -1},
    {  0,  -4,   0,   0,   0,   4,   0,   0,   0,   4,   0,   0,   0,  -4,   0},
    {  1,   0,  -1,   0,  -1,   0,   1,   0,  -1,   0,   1,   0,   1,   0,  -1},
}};

}  // namespace golden

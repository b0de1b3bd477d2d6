#pragma once

// Golden reference data for the solvable pair, the degree-6/8 trace vectors,
// and the unique degree-8 kernel pair. Coefficient lists carry their scale
// separately; cyclic-word keys are canonicalized by the tests before use.

namespace kva_fixtures {

// Low-degree tail of the first series: 1/4 y + ... through degree 4.
inline constexpr const char* kF0LowDegrees =
    "1/4*y + 1/24*[x,y] - 1/48*[x,[x,y]] - 1/48*[y,[x,y]]"
    " - 1/180*[x,[x,[x,y]]] - 1/480*[y,[x,[x,y]]] + 1/360*[y,[y,[x,y]]]";

inline constexpr long kF0Scale5 = 2880;
inline constexpr const char* kF0Degree5 =
    "[x,[x,[x,[x,y]]]] + 8*[y,[x,[x,[x,y]]]] + 8*[y,[y,[x,[x,y]]]]"
    " + [y,[y,[y,[x,y]]]] + 6*[[x,y],[x,[x,y]]] + 2*[[x,y],[y,[x,y]]]";

inline constexpr long kF0Scale6 = 120960;
inline constexpr const char* kF0Degree6 =
    "24*[x,[x,[x,[x,[x,y]]]]] + 69*[y,[x,[x,[x,[x,y]]]]] + 20*[y,[y,[x,[x,[x,y]]]]]"
    " - 39*[y,[y,[y,[x,[x,y]]]]] - 12*[y,[y,[y,[y,[x,y]]]]] + 144*[[x,y],[x,[x,[x,y]]]]"
    " + 114*[[x,y],[y,[x,[x,y]]]] + 18*[[x,y],[y,[y,[x,y]]]] - 18*[[x,[x,y]],[y,[x,y]]]";

inline constexpr long kF0Scale7 = 1209600;
inline constexpr const char* kF0Degree7 =
    "-10*[x,[x,[x,[x,[x,[x,y]]]]]] - 120*[y,[x,[x,[x,[x,[x,y]]]]]]"
    " - 380*[y,[y,[x,[x,[x,[x,y]]]]]] - 380*[y,[y,[y,[x,[x,[x,y]]]]]]"
    " - 120*[y,[y,[y,[y,[x,[x,y]]]]]] - 10*[y,[y,[y,[y,[y,[x,y]]]]]]"
    " - 150*[[x,y],[x,[x,[x,[x,y]]]]] - 940*[[x,y],[y,[x,[x,[x,y]]]]]"
    " - 960*[[x,y],[y,[y,[x,[x,y]]]]] - 210*[[x,y],[y,[y,[y,[x,y]]]]]"
    " - 240*[[x,y],[[x,y],[x,[x,y]]]] - 60*[[x,y],[[x,y],[y,[x,y]]]]"
    " - 60*[[x,[x,y]],[x,[x,[x,y]]]] + 30*[[x,[x,y]],[y,[x,[x,y]]]]"
    " + 360*[[x,[x,y]],[y,[y,[x,y]]]] - 740*[[y,[x,y]],[x,[x,[x,y]]]]"
    " - 1170*[[y,[x,y]],[y,[x,[x,y]]]] - 180*[[y,[x,y]],[y,[y,[x,y]]]]";

inline constexpr long kF0Scale8 = 21772800;
inline constexpr const char* kF0Degree8 =
    "-144*[x,[x,[x,[x,[x,[x,[x,y]]]]]]] - 666*[y,[x,[x,[x,[x,[x,[x,y]]]]]]]"
    " - 1116*[y,[y,[x,[x,[x,[x,[x,y]]]]]]] - 315*[y,[y,[y,[x,[x,[x,[x,y]]]]]]]"
    " + 612*[y,[y,[y,[y,[x,[x,[x,y]]]]]]] + 414*[y,[y,[y,[y,[y,[x,[x,y]]]]]]]"
    " + 72*[y,[y,[y,[y,[y,[y,[x,y]]]]]]] - 2160*[[x,y],[x,[x,[x,[x,[x,y]]]]]]"
    " - 6618*[[x,y],[y,[x,[x,[x,[x,y]]]]]] - 4940*[[x,y],[y,[y,[x,[x,[x,y]]]]]]"
    " - 226*[[x,y],[y,[y,[y,[x,[x,y]]]]]] + 264*[[x,y],[y,[y,[y,[y,[x,y]]]]]]"
    " - 5712*[[x,y],[[x,y],[x,[x,[x,y]]]]] - 6480*[[x,y],[[x,y],[y,[x,[x,y]]]]]"
    " - 1188*[[x,y],[[x,y],[y,[y,[x,y]]]]] - 2160*[[x,[x,y]],[x,[x,[x,[x,y]]]]]"
    " - 3852*[[x,[x,y]],[y,[x,[x,[x,y]]]]] - 1970*[[x,[x,y]],[y,[y,[x,[x,y]]]]]"
    " - 1166*[[x,[x,y]],[y,[y,[y,[x,y]]]]] - 1464*[[x,[x,y]],[[x,y],[x,[x,y]]]]"
    " + 3280*[[x,[x,y]],[[x,y],[y,[x,y]]]] - 3738*[[y,[x,y]],[x,[x,[x,[x,y]]]]]"
    " - 3360*[[y,[x,y]],[y,[x,[x,[x,y]]]]] + 2356*[[y,[x,y]],[y,[y,[x,[x,y]]]]]"
    " + 750*[[y,[x,y]],[y,[y,[y,[x,y]]]]] - 5520*[[y,[x,y]],[[x,y],[x,[x,y]]]]"
    " - 356*[[y,[x,y]],[[x,y],[y,[x,y]]]] + 2412*[[x,[x,[x,y]]],[y,[x,[x,y]]]]"
    " + 580*[[x,[x,[x,y]]],[y,[y,[x,y]]]] - 2884*[[y,[x,[x,y]]],[y,[y,[x,y]]]]";

// Length-6 cyclic basis and the shared coordinate vector of both trace sides,
// at scale 1/120960.
inline constexpr const char* kCyclic6Words[] = {
    "111111", "111112", "112112", "111212", "121212", "111122", "112212",
    "112122", "122122", "111222", "121222", "112222", "122222", "222222"};
inline constexpr long kTrace6Vector[] = {0,   -12, 36, -96, -144, 30, 72,
                                         72,  36,  -40, -96, 30,  -12, 0};

// Length-8 cyclic basis and the two trace sides, at scale 1/21772800.
inline constexpr const char* kCyclic8Words[] = {
    "11111111", "11111112", "11121112", "11112112", "11111212", "11211212",
    "11121212", "12121212", "11111122", "11112212", "11122112", "11121122",
    "11221212", "11221122", "11112122", "11212212", "11212122", "11122122",
    "12122122", "11111222", "11122212", "11211222", "11222122", "11121222",
    "12121222", "11221222", "12221222", "11112222", "11222212", "11212222",
    "12212222", "11122222", "12122222", "11222222", "12222222", "22222222"};
inline constexpr long kTrace8Rhs[] = {
    0,     72,    720,   -1080, 864,   -2160, 4320,  4320,  -252,
    -1080, 0,     0,     -2160, 540,   -1080, -2160, -2160, 0,
    -2160, 504,   1440,  0,     0,     1440,  4320,  0,     720,
    -630,  -1080, -1080, -1080, 504,   864,   -252,  72,    0};
inline constexpr long kTrace8Lhs[] = {
    0,     72,    720,   -1080, 864,   -2160, 4320,  4320,  -252,
    -1088, 40,    -40,   -2160, 540,   -1072, -2160, -2160, 0,
    -2160, 504,   1440,  0,     -40,   1440,  4320,  40,    720,
    -630,  -1072, -1088, -1080, 504,   864,   -252,  72,    0};
inline constexpr long kTraceScale8 = 21772800;
inline constexpr long kTraceScale6 = 120960;

// Eight-term degree-8 defect (right side minus left side), same scale.
struct DefectTerm {
  const char* word;
  long coeff;
};
inline constexpr DefectTerm kDefect8[] = {
    {"11112212", 8},  {"11112122", -8}, {"11222212", -8}, {"11212222", 8},
    {"11121122", 40}, {"11122112", -40}, {"11222122", 40}, {"11221222", -40}};

// The unique degree-8 kernel pair, published with integer coefficients.
inline constexpr const char* kKernel8A =
    "4*[[x,y],[y,[x,[x,[x,[x,y]]]]]] + 6*[[x,y],[y,[y,[x,[x,[x,y]]]]]]"
    " - 6*[[x,y],[y,[y,[y,[x,[x,y]]]]]] - 4*[[x,y],[y,[y,[y,[y,[x,y]]]]]]"
    " - 4*[[x,y],[[x,y],[x,[x,[x,y]]]]] + 6*[[x,[x,y]],[y,[x,[x,[x,y]]]]]"
    " + 6*[[x,[x,y]],[y,[y,[x,[x,y]]]]] - 3*[[x,[x,y]],[y,[y,[y,[x,y]]]]]"
    " + 2*[[x,[x,y]],[[x,y],[x,[x,y]]]] - 3*[[x,[x,y]],[[x,y],[y,[x,y]]]]"
    " + 4*[[y,[x,y]],[x,[x,[x,[x,y]]]]] + 9*[[y,[x,y]],[y,[x,[x,[x,y]]]]]"
    " - 12*[[y,[x,y]],[y,[y,[x,[x,y]]]]] - 10*[[y,[x,y]],[y,[y,[y,[x,y]]]]]"
    " + 9*[[y,[x,y]],[[x,y],[x,[x,y]]]] - 3*[[y,[x,y]],[[x,y],[y,[x,y]]]]"
    " - 6*[[x,[x,[x,y]]],[y,[x,[x,y]]]] - 3*[[x,[x,[x,y]]],[y,[y,[x,y]]]]"
    " + 3*[[y,[x,[x,y]]],[y,[y,[x,y]]]]";
inline constexpr const char* kKernel8B =
    "-4*[[x,y],[x,[x,[x,[x,[x,y]]]]]] - 6*[[x,y],[y,[x,[x,[x,[x,y]]]]]]"
    " + 6*[[x,y],[y,[y,[x,[x,[x,y]]]]]] + 4*[[x,y],[y,[y,[y,[x,[x,y]]]]]]"
    " - 12*[[x,y],[[x,y],[x,[x,[x,y]]]]] + 18*[[x,y],[[x,y],[y,[x,[x,y]]]]]"
    " + 12*[[x,y],[[x,y],[y,[y,[x,y]]]]] - 10*[[x,[x,y]],[x,[x,[x,[x,y]]]]]"
    " - 12*[[x,[x,y]],[y,[x,[x,[x,y]]]]] + 9*[[x,[x,y]],[y,[y,[x,[x,y]]]]]"
    " + 4*[[x,[x,y]],[y,[y,[y,[x,y]]]]] - 9*[[x,[x,y]],[[x,y],[x,[x,y]]]]"
    " - 3*[[y,[x,y]],[x,[x,[x,[x,y]]]]] + 6*[[y,[x,y]],[y,[x,[x,[x,y]]]]]"
    " + 6*[[y,[x,y]],[y,[y,[x,[x,y]]]]] + 9*[[y,[x,y]],[[x,y],[x,[x,y]]]]"
    " + 4*[[y,[x,y]],[[x,y],[y,[x,y]]]] - 3*[[x,[x,[x,y]]],[y,[x,[x,y]]]]"
    " + 3*[[x,[x,[x,y]]],[y,[y,[x,y]]]] + 6*[[y,[x,[x,y]]],[y,[y,[x,y]]]]";

// Graded dimension table: free-Lie and cyclic-word dimensions for degrees
// 1..16, and the kernel dimensions for degrees 1..14.
inline constexpr unsigned long long kLieDims[] = {2,  1,  2,   3,   6,   9,
                                                  18, 30, 56,  99,  186, 335,
                                                  630, 1161, 2182, 4080};
inline constexpr unsigned long long kCyclicDims[] = {2,  3,  4,   6,   8,   14,
                                                     20, 36, 60,  108, 188, 352,
                                                     632, 1182, 2192, 4116};
inline constexpr unsigned long long kKernelDims[] = {1, 0, 0, 0, 0, 0, 0,
                                                     1, 0, 1, 1, 2, 2, 3};

}  // namespace kva_fixtures

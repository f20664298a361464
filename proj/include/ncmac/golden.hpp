#pragma once

// Expansions transcribed verbatim from the printed tables.

#include <string_view>
#include <vector>

#include "ncmac/combinat.hpp"

namespace ncmac::golden {

inline constexpr std::string_view kH21Display = R"TEX(t \Phi_{1 1 1} + \Phi_{1 2 1} + qt\Phi_{2 1 2} + qt \Phi_{2 1 1} + \Phi_{2 2 1} + q \Phi_{3 2 1})TEX";

inline constexpr std::string_view kH21EdgeLLT = R"TEX(\Phi_{1 1 1} + q \Phi_{1 2 1} + \Phi_{2 1 1} + \Phi_{2 1 2} + q \Phi_{2 2 1} + q \Phi_{3 2 1})TEX";

inline constexpr std::string_view kH21PathLLT = R"TEX(\Phi_{1 1 1} + q \Phi_{1 2 1} + q \Phi_{2 1 1} + q \Phi_{2 1 2} + q \Phi_{2 2 1} + q^2  \Phi_{3 2 1})TEX";

inline constexpr std::string_view kH211Phi = R"TEX(t^3  \Phi_{1111} + q t^3  \Phi_{1121} + t \Phi_{1211} + t \Phi_{1212}
+ q t^3  \Phi_{1221} + q t \Phi_{1321} \\
&+ t^2 \Phi_{2111} + t^2 \Phi_{2112}
+ q t^2  \Phi_{2121} + t \Phi_{2211} + t^2  \Phi_{2122} + t \Phi_{2212} \\
&  + q t^3  \Phi_{2221} + q t^2  \Phi_{2132} + t \Phi_{2312} + qt\Phi_{2321}
+ q t^2  \Phi_{3121} + \Phi_{3211} \\
& + \Phi_{3212} + q t^2 \Phi_{3221}
+ \Phi_{3213} + q t^2  \Phi_{3231} + q t \Phi_{3321} + q \Phi_{4321})TEX";

inline constexpr std::string_view kLLT211Base = R"TEX(\Phi_{1111} + q \Phi_{1121} + \Phi_{1211} + \Phi_{1212} + q \Phi_{1221} +
q \Phi_{1321} \\
&+ \Phi_{2111} + \Phi_{2112} + q \Phi_{2121} + \Phi_{2211} + \Phi_{2122} +
\Phi_{2212} \\
&+ q \Phi_{2221} + q \Phi_{2132} + \Phi_{2312} + q \Phi_{2321} + q
\Phi_{3121} + \Phi_{3211}  \\
&+ \Phi_{3212} + q \Phi_{3221} + \Phi_{3213} + q \Phi_{3231} + q \Phi_{3321} +
q \Phi_{4321})TEX";

inline constexpr std::string_view kLLT211T2 = R"TEX(\Phi_{1111} + q \Phi_{1121} + q \Phi_{1211} +
q \Phi_{1212} + q \Phi_{1221} + q^2  \Phi_{1321} \\
&+ \Phi_{2111} + \Phi_{2112} + q \Phi_{2121} +
q \Phi_{2211} + \Phi_{2122} + q \Phi_{2212} \\
&+ q \Phi_{2221} + q \Phi_{2132} + q \Phi_{2312} +
q^2  \Phi_{2321} + q \Phi_{3121} + q \Phi_{3211} \\
&+ q \Phi_{3212} + q \Phi_{3221} + q \Phi_{3213} +
q \Phi_{3231} + q^2  \Phi_{3321} + q^2  \Phi_{4321})TEX";

inline constexpr std::string_view kLLT211T1 = R"TEX(\Phi_{1111} + q \Phi_{1121} + \Phi_{1211} +
\Phi_{1212} + q \Phi_{1221} + q \Phi_{1321} \\
&+ q \Phi_{2111} + q \Phi_{2112} + q^2  \Phi_{2121} +
\Phi_{2211} + q \Phi_{2122} + \Phi_{2212} \\
&+ q \Phi_{2221} + q^2  \Phi_{2132} + \Phi_{2312} +
q \Phi_{2321} + q^2  \Phi_{3121} + q \Phi_{3211} \\
&+ q \Phi_{3212} + q^2  \Phi_{3221} + q \Phi_{3213} +
q^2  \Phi_{3231} + q \Phi_{3321} + q^2  \Phi_{4321})TEX";

inline constexpr std::string_view kLLT211Both = R"TEX(\Phi_{1111} + q \Phi_{1121} + q \Phi_{1211} +
q \Phi_{1212} + q \Phi_{1221} + q^2  \Phi_{1321} \\
&+ q \Phi_{2111} + q \Phi_{2112} + q^2  \Phi_{2121} +
q \Phi_{2211} + q \Phi_{2122} + q \Phi_{2212} \\
&+ q \Phi_{2221} + q^2  \Phi_{2132} + q \Phi_{2312} +
q^2  \Phi_{2321} + q^2  \Phi_{3121} + q^2  \Phi_{3211} \\
&+ q^2  \Phi_{3212} + q^2  \Phi_{3221} + q^2  \Phi_{3213} +
q^2  \Phi_{3231} + q^2  \Phi_{3321} + q^3  \Phi_{4321})TEX";

inline constexpr std::string_view kH211MultiT = R"TEX(&\ t_1 t_2 \Phi_{1111} + q t_1 t_2 \Phi_{1121} + t_1 \Phi_{1211} +
t_1 \Phi_{1212} + q t_1 t_2 \Phi_{1221} + q t_1 \Phi_{1321} \\
&+ t_2 \Phi_{2111} + t_2 \Phi_{2112} + q t_2 \Phi_{2121} +
t_1 \Phi_{2211} + t_2 \Phi_{2122} + t_1 \Phi_{2212} \\
&+ q t_1 t_2 \Phi_{2221} + q t_2 \Phi_{2132} + t_1 \Phi_{2312} +
q t_1 \Phi_{2321} + q t_2 \Phi_{3121} + \Phi_{3211} \\
&+ \Phi_{3212} + q t_2 \Phi_{3221} + \Phi_{3213} +
q t_2 \Phi_{3231} + q t_1 \Phi_{3321} + q \Phi_{4321})TEX";

inline constexpr std::string_view kTildeH211Schur = R"TEX(s_4+(q+t_1+t_2)s_{31}+(qt_1+t_2)s_{22}
+ (qt_1+qt_2+t_1t_2)s_{211}+qt_1t_2s_{1111})TEX";

inline constexpr std::string_view kTildeH222Rect = R"TEX(&s_{6} +(q t_1+q t_2+q+t_1+t_2) s_{51}\\
&+(q^2 t_1+q^2 t_2+q t_1 t_2+q^2+q t_1+q t_2+t_1^2+t_1 t_2+t_2^2) s_{42}\\
&+(q^2 t_1 t_2+q^2 t_1+q^2 t_2+q t_1^2+2 q t_1 t_2+q t_2^2+q t_1+q t_2+t_1 t_2) s_{411}\\
&+(q^3+q t_1^2+q t_1 t_2+q t_2^2+t_1 t_2) s_{33}\\
&+(q^3 t_1+q^3 t_2+ q^2 t_1^2+2 q^2 t_1 t_2+q^2 t_2^2+q t_1^2 t_2+q t_1 t_2^2+q^2 t_1+q^2 t_2+q t_1^2+2 q t_1 t_2+q t_2^2+t_1^2 t_2+t_1 t_2^2) s_{321}\\
&+(q^3 t_1 t_2+q^2 t_1^2 t_2+q^2 t_1 t_2^2+q^2 t_1^2+2 q^2 t_1 t_2+q^2 t_2^2+q t_1^2 t_2+q t_1 t_2^2+q t_1 t_2) s_{3111}\\
&+(q^3 t_1 t_2+q^2 t_1^2+q^2 t_1 t_2+q^2 t_2^2+t_1^2 t_2^2) s_{222}\\
&+(q^3 t_1^2+q^3 t_1 t_2 +q^3 t_2^2+q^2 t_1^2 t_2+q^2 t_1 t_2^2+q t_1^2 t_2^2+q^2 t_1 t_2+q t_1^2 t_2+q t_1 t_2^2) s_{2211}\\
&+(q^3 t_1^2 t_2+q^3 t_1 t_2^2+q^2 t_1^2 t_2^2+q^2 t_1^2 t_2+q^2 t_1 t_2^2) s_{21111}+t_1^2 t_2^2 q^3 s_{111111})TEX";

inline constexpr std::string_view kYB52143 = R"TEX(s_{5}
&+(2q+t_1+t_2)s_{41}
+(q^2+qt_1+qt_2+t_1+t_2)s_{32}
+(t_1q^2+q^2t_2+qt_1+qt_2+t_1t_2)s_{221}\\
&+(q^2+2qt_1+2qt_2+t_1t_2)s_{311}
+q(qt_1+qt_2+2t_1t_2)s_{2111}
+q^2t_1t_2s_{11111})TEX";

inline constexpr std::string_view kYB43521 = R"TEX(s_{5} &	+(qt_1+q+t_1+t_2)s_{41}
+ (t_1q^2+qt_1t_2+t_1^2q+qt_1+qt_2+t_1t_2)s_{311}
+(q^2+qt_1+qt_2+t_1t_2+t_1^2)s_{32}\\
&+(t_1q^2+q^2t_2+qt_1t_2+ t_1^2q+t_1^2t_2)s_{221}
+(qt_1t_2+q^2t_1t_2+t_1^2qt_2+t_1^2q^2)s_{2111}
+t_1^2q^2t_2s_{11111})TEX";

struct AnnexEntry {
  Partition mu;
  std::string_view schur;
};

inline const std::vector<AnnexEntry>& annex() {
  static const std::vector<AnnexEntry> tables = {
      {{2,1,1}, R"TEX(s_{4}+( q + t_{1} + t_{2} ) s_{31}+( q t_{1} + t_{2} ) s_{22}+( q t_{1} + q t_{2} + t_{1} t_{2} ) s_{211}+ q t_{1} t_{2}  s_{1111})TEX"},
      {{3,1,1}, R"TEX(s_{5}+( q^{2} + q + t_{1} + t_{2} ) s_{41}+( q^{2} t_{1} + q^{2} + q t_{1} + q t_{2} + t_{2} ) s_{32}\\
&+( q^{3} + q^{2} t_{1} + q^{2} t_{2} + q t_{1} + q t_{2} + t_{1} t_{2} ) s_{311}\\
&+( q^{3} t_{1} + q^{2} t_{1} + q^{2} t_{2} + q t_{1} t_{2} + q t_{2} ) s_{221}+( q^{3} t_{1} + q^{3} t_{2} + q^{2} t_{1} t_{2} + q t_{1} t_{2} ) s_{2111}\\
&+ q^{3} t_{1} t_{2}  s_{11111})TEX"},
      {{2,2,1}, R"TEX(s_{5}+( q t_{1} + q + t_{1} + t_{2} ) s_{41}+( q t_{1}^{2} + q^{2} + q t_{1} + t_{1} t_{2} + t_{2} ) s_{32}\\
&+( q^{2} t_{1} + q t_{1}^{2} + q t_{1} t_{2} + q t_{1} + q t_{2} + t_{1} t_{2} ) s_{311}\\
&+( q^{2} t_{1}^{2} + q^{2} t_{1} + q t_{1} t_{2} + t_{1}^{2} t_{2} + q t_{2} ) s_{221}+( q^{2} t_{1}^{2} + q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} + q t_{1} t_{2} ) s_{2111}\\
&+ q^{2} t_{1}^{2} t_{2}  s_{11111})TEX"},
      {{2,1,1,1}, R"TEX(s_{5}+( q + t_{1} + t_{2} + t_{3} ) s_{41}+( q t_{1} + q t_{2} + t_{1} t_{3} + t_{2} + t_{3} ) s_{32}\\
&+( q t_{1} + q t_{2} + t_{1} t_{2} + q t_{3} + t_{1} t_{3} + t_{2} t_{3} ) s_{311}\\
&+( q t_{1} t_{2} + q t_{1} t_{3} + q t_{2} + t_{1} t_{3} + t_{2} t_{3} ) s_{221}+( q t_{1} t_{2} + q t_{1} t_{3} + q t_{2} t_{3} + t_{1} t_{2} t_{3} ) s_{2111}\\
&+ q t_{1} t_{2} t_{3}  s_{11111})TEX"},
      {{4,1,1}, R"TEX(s_{6}+( q^{3} + q^{2} + q + t_{1} + t_{2} ) s_{51}+( q^{4} + q^{3} t_{1} + q^{3} + q^{2} t_{1} + q^{2} t_{2} + q^{2} + q t_{1} + q t_{2} + t_{2} ) s_{42}\\
&+( q^{5} + q^{4} + q^{3} t_{1} + q^{3} t_{2} + q^{3} + q^{2} t_{1} + q^{2} t_{2} + q t_{1} + q t_{2} + t_{1} t_{2} ) s_{411}+( q^{4} t_{1} + q^{3} + q^{2} t_{1} + q^{2} t_{2} + q t_{2} ) s_{33}\\
&+( q^{5} t_{1} + q^{5} + 2 q^{4} t_{1} + q^{4} t_{2} + q^{4} + 2 q^{3} t_{1} + 2 q^{3} t_{2} + q^{2} t_{1} t_{2} + q^{2} t_{1} + 2 q^{2} t_{2} + q t_{1} t_{2} + q t_{2} ) s_{321}\\
&+( q^{6} + q^{5} t_{1} + q^{5} t_{2} + q^{4} t_{1} + q^{4} t_{2} + q^{3} t_{1} t_{2} + q^{3} t_{1} + q^{3} t_{2} + q^{2} t_{1} t_{2} + q t_{1} t_{2} ) s_{3111}\\
&+( q^{5} t_{1} + q^{4} t_{1} + q^{4} t_{2} + q^{3} t_{1} t_{2} + q^{2} t_{2} ) s_{222}+( q^{6} t_{1} + q^{5} t_{1} + q^{5} t_{2} + q^{4} t_{1} t_{2} + q^{4} t_{1} + q^{4} t_{2} + q^{3} t_{1} t_{2} + q^{3} t_{2} + q^{2} t_{1} t_{2} ) s_{2211}\\
&+( q^{6} t_{1} + q^{6} t_{2} + q^{5} t_{1} t_{2} + q^{4} t_{1} t_{2} + q^{3} t_{1} t_{2} ) s_{21111}+ q^{6} t_{1} t_{2}  s_{111111})TEX"},
      {{3,2,1}, R"TEX(s_{6}+( q^{2} + q t_{1} + q + t_{1} + t_{2} ) s_{51}+( q^{3} + 2 q^{2} t_{1} + q t_{1}^{2} + q^{2} + q t_{1} + q t_{2} + t_{1} t_{2} + t_{2} ) s_{42}\\
&+( q^{3} t_{1} + q^{3} + 2 q^{2} t_{1} + q t_{1}^{2} + q^{2} t_{2} + q t_{1} t_{2} + q t_{1} + q t_{2} + t_{1} t_{2} ) s_{411}+( q^{2} t_{1}^{2} + q^{3} + q^{2} t_{1} + q t_{2} + t_{1} t_{2} ) s_{33}\\
&+( q^{3} t_{1}^{2} + q^{4} + 3 q^{3} t_{1} + 2 q^{2} t_{1}^{2} + q^{2} t_{1} t_{2} + q^{2} t_{1} + 2 q^{2} t_{2} + 3 q t_{1} t_{2} + t_{1}^{2} t_{2} + q t_{2} ) s_{321}\\
&+( q^{4} t_{1} + q^{3} t_{1}^{2} + q^{3} t_{1} t_{2} + q^{3} t_{1} + q^{2} t_{1}^{2} + q^{3} t_{2} + 2 q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} + q t_{1} t_{2} ) s_{3111}\\
&+( q^{4} t_{1} + q^{3} t_{1}^{2} + q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} + q^{2} t_{2} ) s_{222}+( q^{4} t_{1}^{2} + q^{4} t_{1} + q^{3} t_{1}^{2} + q^{3} t_{1} t_{2} + q^{2} t_{1}^{2} t_{2} + q^{3} t_{2} + 2 q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} ) s_{2211}\\
&+( q^{4} t_{1}^{2} + q^{4} t_{1} t_{2} + q^{3} t_{1}^{2} t_{2} + q^{3} t_{1} t_{2} + q^{2} t_{1}^{2} t_{2} ) s_{21111}+ q^{4} t_{1}^{2} t_{2}  s_{111111})TEX"},
      {{3,1,1,1}, R"TEX(s_{6}+( q^{2} + q + t_{1} + t_{2} + t_{3} ) s_{51}+( q^{2} t_{1} + q^{2} t_{2} + q^{2} + q t_{1} + q t_{2} + q t_{3} + t_{1} t_{3} + t_{2} + t_{3} ) s_{42}\\
&+( q^{3} + q^{2} t_{1} + q^{2} t_{2} + q^{2} t_{3} + q t_{1} + q t_{2} + t_{1} t_{2} + q t_{3} + t_{1} t_{3} + t_{2} t_{3} ) s_{411}+( q^{2} t_{1} + q^{2} t_{2} + q t_{1} t_{3} + q t_{2} + t_{3} ) s_{33}\\
&+( q^{3} t_{1} + q^{3} t_{2} + q^{2} t_{1} t_{2} + q^{2} t_{1} t_{3} + q^{2} t_{1} + 2 q^{2} t_{2} + q t_{1} t_{2} + q^{2} t_{3} + 2 q t_{1} t_{3} + q t_{2} t_{3} + q t_{2} + q t_{3} + t_{1} t_{3} + t_{2} t_{3} ) s_{321}\\
&+( q^{3} t_{1} + q^{3} t_{2} + q^{2} t_{1} t_{2} + q^{3} t_{3} + q^{2} t_{1} t_{3} + q^{2} t_{2} t_{3} + q t_{1} t_{2} + q t_{1} t_{3} + q t_{2} t_{3} + t_{1} t_{2} t_{3} ) s_{3111}\\
&+( q^{3} t_{1} t_{2} + q^{2} t_{1} t_{3} + q^{2} t_{2} + q t_{1} t_{3} + q t_{2} t_{3} ) s_{222}\\
&+( q^{3} t_{1} t_{2} + q^{3} t_{1} t_{3} + q^{3} t_{2} + q^{2} t_{1} t_{2} + q^{2} t_{1} t_{3} + q^{2} t_{2} t_{3} + q t_{1} t_{2} t_{3} + q t_{1} t_{3} + q t_{2} t_{3} ) s_{2211}\\
&+( q^{3} t_{1} t_{2} + q^{3} t_{1} t_{3} + q^{3} t_{2} t_{3} + q^{2} t_{1} t_{2} t_{3} + q t_{1} t_{2} t_{3} ) s_{21111}+ q^{3} t_{1} t_{2} t_{3}  s_{111111})TEX"},
      {{2,2,2}, R"TEX(s_{6}+( q t_{1} + q t_{2} + q + t_{1} + t_{2} ) s_{51}+( q^{2} t_{1} + q^{2} t_{2} + q t_{1} t_{2} + q^{2} + q t_{1} + t_{1}^{2} + q t_{2} + t_{1} t_{2} + t_{2}^{2} ) s_{42}\\
&+( q^{2} t_{1} t_{2} + q^{2} t_{1} + q t_{1}^{2} + q^{2} t_{2} + 2 q t_{1} t_{2} + q t_{2}^{2} + q t_{1} + q t_{2} + t_{1} t_{2} ) s_{411}+( q^{3} + q t_{1}^{2} + q t_{1} t_{2} + q t_{2}^{2} + t_{1} t_{2} ) s_{33}\\
&+( q^{3} t_{1} + q^{2} t_{1}^{2} + q^{3} t_{2} + 2 q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} + q^{2} t_{2}^{2} + q t_{1} t_{2}^{2} + q^{2} t_{1} + q t_{1}^{2} + q^{2} t_{2} + 2 q t_{1} t_{2} + t_{1}^{2} t_{2} + q t_{2}^{2} + t_{1} t_{2}^{2} ) s_{321}\\
&+( q^{3} t_{1} t_{2} + q^{2} t_{1}^{2} t_{2} + q^{2} t_{1} t_{2}^{2} + q^{2} t_{1}^{2} + 2 q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} + q^{2} t_{2}^{2} + q t_{1} t_{2}^{2} + q t_{1} t_{2} ) s_{3111}\\
&+( q^{3} t_{1} t_{2} + q^{2} t_{1}^{2} + q^{2} t_{1} t_{2} + q^{2} t_{2}^{2} + t_{1}^{2} t_{2}^{2} ) s_{222}\\
&+( q^{3} t_{1}^{2} + q^{3} t_{1} t_{2} + q^{2} t_{1}^{2} t_{2} + q^{3} t_{2}^{2} + q^{2} t_{1} t_{2}^{2} + q t_{1}^{2} t_{2}^{2} + q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} + q t_{1} t_{2}^{2} ) s_{2211}\\
&+( q^{3} t_{1}^{2} t_{2} + q^{3} t_{1} t_{2}^{2} + q^{2} t_{1}^{2} t_{2}^{2} + q^{2} t_{1}^{2} t_{2} + q^{2} t_{1} t_{2}^{2} ) s_{21111}+ q^{3} t_{1}^{2} t_{2}^{2}  s_{111111})TEX"},
      {{2,2,1,1}, R"TEX(s_{6}+( q t_{1} + q + t_{1} + t_{2} + t_{3} ) s_{51}+( q t_{1}^{2} + q t_{1} t_{2} + q^{2} + q t_{1} + q t_{2} + 2 t_{1} t_{3} + t_{2} + t_{3} ) s_{42}\\
&+( q^{2} t_{1} + q t_{1}^{2} + q t_{1} t_{2} + q t_{1} t_{3} + q t_{1} + q t_{2} + t_{1} t_{2} + q t_{3} + t_{1} t_{3} + t_{2} t_{3} ) s_{411}+( q^{2} t_{1} + q t_{1} t_{2} + t_{1}^{2} t_{3} + q t_{2} + t_{3} ) s_{33}\\
&+( q^{2} t_{1}^{2} + q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} + q t_{1}^{2} t_{3} + q^{2} t_{1} + q^{2} t_{2} + 2 q t_{1} t_{2} + 2 q t_{1} t_{3} + t_{1}^{2} t_{3} + t_{1} t_{2} t_{3} + q t_{2} + q t_{3} + t_{1} t_{3} + t_{2} t_{3} ) s_{321}\\
&+( q^{2} t_{1}^{2} + q^{2} t_{1} t_{2} + q t_{1}^{2} t_{2} + q^{2} t_{1} t_{3} + q t_{1}^{2} t_{3} + q t_{1} t_{2} t_{3} + q t_{1} t_{2} + q t_{1} t_{3} + q t_{2} t_{3} + t_{1} t_{2} t_{3} ) s_{3111}\\
&+( q^{2} t_{1}^{2} t_{2} + q t_{1}^{2} t_{3} + q^{2} t_{2} + q t_{1} t_{3} + t_{1} t_{2} t_{3} ) s_{222}\\
&+( q^{2} t_{1}^{2} t_{2} + q^{2} t_{1}^{2} t_{3} + 2 q^{2} t_{1} t_{2} + q t_{1}^{2} t_{3} + q t_{1} t_{2} t_{3} + t_{1}^{2} t_{2} t_{3} + q t_{1} t_{3} + q t_{2} t_{3} ) s_{2211}\\
&+( q^{2} t_{1}^{2} t_{2} + q^{2} t_{1}^{2} t_{3} + q^{2} t_{1} t_{2} t_{3} + q t_{1}^{2} t_{2} t_{3} + q t_{1} t_{2} t_{3} ) s_{21111}+ q^{2} t_{1}^{2} t_{2} t_{3}  s_{111111})TEX"},
      {{2,1,1,1,1}, R"TEX(s_{6}+( q + t_{1} + t_{2} + t_{3} + t_{4} ) s_{51}+( q t_{1} + q t_{2} + q t_{3} + t_{1} t_{3} + t_{1} t_{4} + t_{2} t_{4} + t_{2} + t_{3} + t_{4} ) s_{42}\\
&+( q t_{1} + q t_{2} + t_{1} t_{2} + q t_{3} + t_{1} t_{3} + t_{2} t_{3} + q t_{4} + t_{1} t_{4} + t_{2} t_{4} + t_{3} t_{4} ) s_{411}+( q t_{1} t_{3} + q t_{2} + t_{1} t_{4} + t_{2} t_{4} + t_{3} ) s_{33}\\
&+( q t_{1} t_{2} + 2 q t_{1} t_{3} + q t_{2} t_{3} + q t_{1} t_{4} + q t_{2} t_{4} + t_{1} t_{2} t_{4} + t_{1} t_{3} t_{4} + q t_{2} + q t_{3} + t_{1} t_{3} + t_{2} t_{3} + t_{1} t_{4} + 2 t_{2} t_{4} + t_{3} t_{4} ) s_{321}\\
&+( q t_{1} t_{2} + q t_{1} t_{3} + q t_{2} t_{3} + t_{1} t_{2} t_{3} + q t_{1} t_{4} + q t_{2} t_{4} + t_{1} t_{2} t_{4} + q t_{3} t_{4} + t_{1} t_{3} t_{4} + t_{2} t_{3} t_{4} ) s_{3111}\\
&+( q t_{1} t_{2} t_{4} + q t_{1} t_{3} + q t_{2} t_{3} + t_{1} t_{3} t_{4} + t_{2} t_{4} ) s_{222}\\
&+( q t_{1} t_{2} t_{3} + q t_{1} t_{2} t_{4} + q t_{1} t_{3} t_{4} + q t_{1} t_{3} + q t_{2} t_{3} + q t_{2} t_{4} + t_{1} t_{2} t_{4} + t_{1} t_{3} t_{4} + t_{2} t_{3} t_{4} ) s_{2211}\\
&+( q t_{1} t_{2} t_{3} + q t_{1} t_{2} t_{4} + q t_{1} t_{3} t_{4} + q t_{2} t_{3} t_{4} + t_{1} t_{2} t_{3} t_{4} ) s_{21111}+ q t_{1} t_{2} t_{3} t_{4}  s_{111111})TEX"},
  };
  return tables;
}

}  // namespace ncmac::golden

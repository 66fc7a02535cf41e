#include "tribuild/presentations.hpp"

namespace tribuild {

// Row labels of the 168 torsion presentations with their building tags.
std::string_view appendix_text() {
  static constexpr std::string_view kText = R"(T24 (1) y_1, y_2, y_6, y_5, y_14, y_10, y_7, y_8, y_12, y_3, y_4, y_9, y_15, y_13, y_11
T25 (2) y_1, y_2, y_9, y_10, y_3, y_5, y_14, y_8, y_15, y_13, y_7, y_4, y_6, y_12, y_11
T26 (2) y_1, y_2, y_6, y_3, y_15, y_7, y_8, y_14, y_9, y_10, y_11, y_12, y_4, y_5, y_13
T27 (1) y_1, y_2, y_14, y_13, y_10, y_4, y_3, y_6, y_8, y_15, y_11, y_9, y_5, y_7, y_12
T28 (2) y_1, y_2, y_3, y_5, y_14, y_15, y_8, y_9, y_10, y_6, y_7, y_12, y_11, y_4, y_13
T29 (1) y_1, y_4, y_12, y_3, y_9, y_6, y_11, y_5, y_7, y_14, y_15, y_10, y_13, y_2, y_8
T30 (2) y_1, y_2, y_4, y_9, y_6, y_10, y_11, y_13, y_14, y_3, y_15, y_7, y_5, y_12, y_8
T31 (2) y_2, y_6, y_13, y_14, y_3, y_8, y_7, y_1, y_9, y_15, y_4, y_5, y_12, y_11, y_10
T32 (2) y_1, y_2, y_6, y_8, y_10, y_4, y_15, y_14, y_13, y_11, y_9, y_7, y_5, y_12, y_3
T33 (1) y_1, y_2, y_7, y_3, y_14, y_15, y_9, y_11, y_13, y_5, y_6, y_4, y_12, y_10, y_8
T34 (2) y_2, y_7, y_8, y_4, y_6, y_5, y_1, y_3, y_9, y_14, y_15, y_12, y_13, y_11, y_10
T35 (2) y_4, y_9, y_12, y_11, y_8, y_15, y_1, y_3, y_2, y_6, y_13, y_10, y_5, y_7, y_14
T36 (1) y_1, y_10, y_11, y_2, y_8, y_5, y_14, y_7, y_6, y_9, y_12, y_3, y_13, y_4, y_15
T37 (2) y_1, y_2, y_3, y_15, y_9, y_4, y_7, y_12, y_10, y_11, y_5, y_14, y_6, y_13, y_8
T38 (1) y_1, y_2, y_4, y_15, y_13, y_6, y_11, y_5, y_12, y_8, y_3, y_10, y_14, y_7, y_9
T39 (1) y_1, y_2, y_8, y_4, y_6, y_10, y_13, y_7, y_3, y_14, y_12, y_5, y_11, y_9, y_15
T40 (2) y_1, y_2, y_4, y_15, y_14, y_3, y_5, y_11, y_9, y_10, y_12, y_8, y_6, y_7, y_13
T41 (2) y_1, y_2, y_6, y_4, y_14, y_10, y_3, y_12, y_13, y_11, y_7, y_5, y_15, y_8, y_9
T42 (1) y_1, y_2, y_6, y_10, y_13, y_3, y_5, y_8, y_11, y_15, y_7, y_4, y_14, y_9, y_12
T43 (1) y_1, y_2, y_8, y_13, y_15, y_3, y_6, y_11, y_7, y_9, y_4, y_5, y_14, y_12, y_10
T44 (1) y_1, y_2, y_4, y_5, y_3, y_15, y_6, y_11, y_7, y_8, y_12, y_10, y_9, y_14, y_13
T45 (2) y_1, y_2, y_4, y_8, y_11, y_10, y_13, y_9, y_7, y_6, y_12, y_15, y_5, y_14, y_3
T46 (1) y_1, y_2, y_6, y_3, y_8, y_10, y_15, y_5, y_11, y_9, y_13, y_12, y_7, y_4, y_14
T47 (2) y_1, y_2, y_8, y_15, y_4, y_6, y_7, y_5, y_3, y_14, y_11, y_12, y_13, y_9, y_10
T48 (2) y_1, y_2, y_8, y_15, y_6, y_7, y_13, y_4, y_9, y_12, y_14, y_5, y_11, y_3, y_10
T49 (2) y_1, y_2, y_3, y_5, y_4, y_15, y_6, y_10, y_8, y_9, y_7, y_11, y_12, y_14, y_13
T50 (2) y_1, y_2, y_3, y_6, y_12, y_10, y_8, y_11, y_15, y_14, y_4, y_5, y_9, y_13, y_7
T51 (2) y_1, y_2, y_4, y_12, y_3, y_15, y_5, y_9, y_14, y_7, y_11, y_10, y_6, y_13, y_8
T52 (2) y_1, y_2, y_6, y_3, y_14, y_15, y_10, y_13, y_11, y_12, y_8, y_7, y_4, y_5, y_9
T53 (1) y_1, y_2, y_6, y_9, y_12, y_10, y_15, y_4, y_3, y_5, y_14, y_11, y_8, y_13, y_7
T54 (2) y_1, y_2, y_12, y_15, y_9, y_11, y_7, y_8, y_5, y_6, y_10, y_3, y_4, y_14, y_13
T55 (2) y_1, y_2, y_13, y_12, y_15, y_7, y_9, y_11, y_4, y_3, y_14, y_8, y_10, y_6, y_5
T56 (1) y_2, y_9, y_15, y_12, y_8, y_5, y_6, y_1, y_3, y_11, y_7, y_4, y_13, y_10, y_14
T57 (2) y_1, y_2, y_4, y_5, y_3, y_15, y_11, y_7, y_9, y_6, y_10, y_8, y_12, y_14, y_13
T58 (2) y_1, y_2, y_6, y_5, y_14, y_15, y_10, y_3, y_7, y_4, y_8, y_12, y_11, y_13, y_9
T59 (1) y_1, y_2, y_4, y_8, y_11, y_15, y_6, y_9, y_7, y_10, y_12, y_5, y_13, y_14, y_3
T60 (1) y_1, y_2, y_12, y_15, y_9, y_4, y_7, y_10, y_13, y_3, y_11, y_14, y_8, y_6, y_5
T61 (2) y_1, y_2, y_12, y_5, y_14, y_15, y_8, y_13, y_3, y_6, y_10, y_7, y_11, y_4, y_9
T62 (1) y_1, y_2, y_5, y_6, y_4, y_15, y_9, y_8, y_13, y_14, y_12, y_11, y_10, y_3, y_7
T63 (1) y_1, y_3, y_4, y_8, y_11, y_9, y_15, y_6, y_2, y_10, y_7, y_5, y_14, y_13, y_12
T64 (2) y_1, y_2, y_6, y_7, y_15, y_3, y_11, y_9, y_12, y_10, y_8, y_13, y_4, y_14, y_5
T65 (2) y_1, y_2, y_3, y_8, y_6, y_10, y_15, y_9, y_7, y_14, y_5, y_12, y_4, y_13, y_11
T66 (2) y_1, y_2, y_3, y_4, y_14, y_10, y_15, y_5, y_7, y_6, y_9, y_11, y_8, y_13, y_12
T67 (1) y_1, y_2, y_7, y_10, y_14, y_8, y_3, y_11, y_4, y_13, y_6, y_12, y_9, y_15, y_5
T68 (1) y_1, y_2, y_7, y_15, y_5, y_4, y_13, y_12, y_8, y_11, y_3, y_6, y_9, y_10, y_14
T69 (2) y_1, y_2, y_3, y_10, y_14, y_8, y_5, y_4, y_15, y_13, y_6, y_9, y_12, y_7, y_11
T70 (2) y_1, y_2, y_4, y_6, y_9, y_15, y_14, y_8, y_12, y_5, y_10, y_11, y_13, y_7, y_3
T71 (2) y_1, y_2, y_11, y_15, y_12, y_6, y_7, y_4, y_8, y_14, y_9, y_3, y_5, y_10, y_13
T72 (1) y_1, y_2, y_12, y_5, y_9, y_10, y_7, y_15, y_11, y_13, y_4, y_6, y_8, y_3, y_14
T73 (2) y_2, y_6, y_13, y_15, y_3, y_8, y_4, y_1, y_9, y_14, y_11, y_7, y_12, y_5, y_10
T74 (2) y_1, y_2, y_4, y_9, y_8, y_10, y_7, y_3, y_14, y_5, y_12, y_15, y_6, y_13, y_11
T75 (1) y_1, y_10, y_11, y_5, y_14, y_13, y_6, y_7, y_2, y_3, y_12, y_15, y_9, y_4, y_8
T76 (1) y_1, y_2, y_12, y_10, y_14, y_5, y_9, y_13, y_7, y_6, y_15, y_4, y_8, y_11, y_3
T77 (2) y_1, y_2, y_4, y_7, y_10, y_9, y_5, y_3, y_13, y_15, y_6, y_11, y_12, y_14, y_8
T78 (1) y_1, y_2, y_5, y_8, y_12, y_10, y_4, y_7, y_3, y_13, y_11, y_9, y_6, y_15, y_14
T79 (1) y_1, y_2, y_4, y_3, y_14, y_15, y_5, y_11, y_9, y_10, y_12, y_8, y_6, y_7, y_13
T80 (2) y_1, y_2, y_5, y_12, y_14, y_10, y_13, y_11, y_6, y_4, y_8, y_9, y_3, y_7, y_15
T81 (2) y_1, y_2, y_8, y_4, y_14, y_15, y_12, y_6, y_7, y_13, y_9, y_11, y_3, y_5, y_10
T82 (1) y_1, y_2, y_4, y_9, y_15, y_11, y_7, y_12, y_14, y_10, y_8, y_3, y_6, y_5, y_13
T83 (1) y_1, y_2, y_4, y_13, y_15, y_8, y_6, y_5, y_12, y_3, y_7, y_10, y_14, y_9, y_11
T84 (2) y_1, y_2, y_8, y_6, y_4, y_15, y_9, y_3, y_13, y_11, y_5, y_12, y_14, y_7, y_10
T85 (1) y_1, y_2, y_11, y_15, y_14, y_13, y_7, y_3, y_10, y_5, y_4, y_6, y_9, y_8, y_12
T86 (2) y_1, y_6, y_8, y_11, y_9, y_13, y_15, y_12, y_4, y_14, y_7, y_5, y_2, y_3, y_10
T87 (1) y_1, y_2, y_4, y_3, y_6, y_15, y_5, y_11, y_9, y_10, y_12, y_8, y_14, y_7, y_13
T88 (2) y_1, y_2, y_14, y_15, y_5, y_13, y_3, y_4, y_7, y_10, y_6, y_8, y_9, y_11, y_12
T89 (1) y_1, y_2, y_3, y_10, y_13, y_5, y_7, y_8, y_15, y_4, y_9, y_6, y_14, y_12, y_11
T90 (2) y_1, y_2, y_4, y_5, y_14, y_15, y_8, y_12, y_7, y_3, y_6, y_10, y_13, y_11, y_9
T91 (2) y_1, y_2, y_4, y_6, y_15, y_12, y_8, y_14, y_13, y_11, y_9, y_10, y_5, y_3, y_7
T92 (1) y_1, y_2, y_6, y_10, y_9, y_4, y_15, y_12, y_14, y_8, y_5, y_11, y_13, y_7, y_3
T93 (1) y_1, y_2, y_9, y_14, y_10, y_7, y_12, y_4, y_3, y_11, y_5, y_15, y_6, y_13, y_8
T94 (2) y_1, y_2, y_11, y_10, y_3, y_12, y_14, y_8, y_15, y_7, y_5, y_4, y_13, y_6, y_9
T95 (2) y_2, y_14, y_13, y_6, y_3, y_4, y_15, y_8, y_11, y_5, y_12, y_10, y_1, y_9, y_7
T96 (2) y_1, y_3, y_14, y_9, y_15, y_2, y_10, y_12, y_11, y_4, y_5, y_13, y_6, y_7, y_8
T97 (2) y_2, y_3, y_13, y_15, y_4, y_8, y_6, y_12, y_5, y_14, y_1, y_9, y_7, y_11, y_10
T98 (1) y_2, y_10, y_15, y_13, y_9, y_1, y_6, y_8, y_11, y_4, y_7, y_3, y_12, y_14, y_5
T99 (2) y_2, y_11, y_15, y_8, y_1, y_9, y_6, y_12, y_14, y_13, y_7, y_10, y_5, y_3, y_4
T100 (1) y_2, y_14, y_15, y_12, y_7, y_5, y_6, y_8, y_9, y_4, y_1, y_3, y_13, y_11, y_10
T101 (1) y_2, y_4, y_15, y_8, y_13, y_1, y_3, y_12, y_5, y_14, y_7, y_9, y_6, y_11, y_10
T102 (2) y_1, y_10, y_11, y_7, y_5, y_9, y_13, y_2, y_3, y_14, y_12, y_15, y_8, y_4, y_6
T103 (2) y_2, y_4, y_13, y_7, y_6, y_9, y_8, y_14, y_12, y_3, y_5, y_10, y_1, y_15, y_11
T104 (1) y_2, y_10, y_12, y_15, y_1, y_14, y_6, y_4, y_11, y_7, y_8, y_13, y_5, y_9, y_3
T105 (1) y_2, y_6, y_11, y_8, y_13, y_7, y_9, y_12, y_14, y_5, y_15, y_4, y_1, y_3, y_10
T106 (1) y_3, y_6, y_13, y_9, y_2, y_4, y_7, y_10, y_8, y_14, y_1, y_15, y_12, y_11, y_5
T107 (2) y_2, y_3, y_13, y_8, y_15, y_7, y_10, y_9, y_11, y_6, y_12, y_4, y_5, y_1, y_14
T108 (1) y_2, y_3, y_10, y_13, y_8, y_12, y_11, y_15, y_4, y_6, y_1, y_9, y_5, y_14, y_7
T109 (1) y_2, y_7, y_13, y_6, y_3, y_9, y_15, y_5, y_12, y_1, y_8, y_10, y_14, y_4, y_11
T110 (1) y_1, y_2, y_4, y_15, y_13, y_12, y_3, y_8, y_7, y_9, y_14, y_10, y_11, y_5, y_6
T111 (1) y_1, y_2, y_3, y_8, y_9, y_10, y_15, y_6, y_11, y_12, y_5, y_7, y_4, y_13, y_14
T112 (2) y_1, y_2, y_3, y_10, y_14, y_8, y_6, y_5, y_15, y_13, y_7, y_4, y_9, y_12, y_11
T113 (2) y_1, y_2, y_4, y_15, y_6, y_3, y_5, y_14, y_12, y_11, y_9, y_10, y_8, y_13, y_7
T114 (2) y_1, y_2, y_4, y_15, y_13, y_5, y_9, y_3, y_7, y_10, y_12, y_8, y_14, y_11, y_6
T115 (1) y_1, y_2, y_4, y_15, y_13, y_11, y_12, y_7, y_14, y_8, y_6, y_10, y_3, y_5, y_9
T116 (1) y_1, y_2, y_4, y_15, y_14, y_6, y_8, y_13, y_9, y_3, y_10, y_5, y_11, y_12, y_7
T117 (1) y_1, y_2, y_6, y_8, y_13, y_15, y_10, y_4, y_3, y_7, y_5, y_9, y_14, y_12, y_11
T118 (1) y_1, y_6, y_11, y_3, y_9, y_12, y_15, y_5, y_10, y_4, y_14, y_7, y_13, y_2, y_8
T119 (2) y_1, y_2, y_4, y_10, y_9, y_11, y_13, y_8, y_3, y_6, y_15, y_5, y_7, y_14, y_12
T120 (1) y_1, y_2, y_6, y_10, y_3, y_5, y_9, y_8, y_14, y_7, y_12, y_13, y_15, y_11, y_4
T121 (2) y_1, y_2, y_8, y_4, y_7, y_10, y_9, y_3, y_12, y_11, y_14, y_5, y_6, y_13, y_15
T122 (2) y_1, y_2, y_3, y_9, y_15, y_8, y_10, y_5, y_6, y_7, y_4, y_14, y_13, y_12, y_11
T123 (1) y_1, y_2, y_6, y_3, y_10, y_8, y_5, y_14, y_11, y_15, y_9, y_13, y_4, y_7, y_12
T124 (2) y_1, y_2, y_8, y_13, y_7, y_10, y_3, y_12, y_5, y_9, y_6, y_4, y_14, y_11, y_15
T125 (2) y_1, y_2, y_4, y_10, y_8, y_9, y_12, y_5, y_7, y_15, y_6, y_11, y_3, y_13, y_14
T126 (2) y_1, y_2, y_6, y_3, y_10, y_7, y_15, y_13, y_14, y_5, y_8, y_4, y_12, y_11, y_9
T127 (2) y_10, y_11, y_13, y_2, y_5, y_12, y_14, y_7, y_1, y_8, y_4, y_9, y_3, y_6, y_15
T128 (1) y_1, y_4, y_7, y_15, y_11, y_8, y_6, y_3, y_13, y_12, y_14, y_10, y_2, y_9, y_5
T129 (1) y_1, y_2, y_6, y_15, y_5, y_9, y_7, y_8, y_13, y_3, y_4, y_11, y_10, y_12, y_14
T130 (1) y_8, y_14, y_15, y_7, y_11, y_6, y_3, y_12, y_9, y_4, y_1, y_2, y_5, y_10, y_13
T131 (2) y_1, y_2, y_13, y_15, y_9, y_3, y_12, y_14, y_8, y_6, y_7, y_11, y_10, y_5, y_4
T132 (1) y_1, y_2, y_3, y_4, y_10, y_13, y_7, y_15, y_9, y_14, y_12, y_6, y_11, y_8, y_5
T133 (2) y_1, y_2, y_4, y_15, y_3, y_6, y_11, y_12, y_13, y_10, y_8, y_9, y_14, y_7, y_5
T134 (1) y_1, y_2, y_8, y_15, y_6, y_9, y_4, y_12, y_11, y_14, y_7, y_5, y_13, y_3, y_10
T135 (2) y_1, y_2, y_12, y_15, y_8, y_3, y_7, y_10, y_11, y_6, y_4, y_13, y_5, y_9, y_14
T136 (1) y_1, y_2, y_13, y_3, y_14, y_15, y_12, y_11, y_9, y_4, y_7, y_8, y_10, y_6, y_5
T137 (1) y_1, y_4, y_12, y_2, y_13, y_7, y_14, y_8, y_9, y_5, y_15, y_10, y_6, y_3, y_11
T138 (1) y_1, y_2, y_12, y_10, y_4, y_9, y_7, y_15, y_11, y_14, y_5, y_6, y_13, y_3, y_8
T139 (1) y_1, y_2, y_3, y_4, y_10, y_13, y_15, y_8, y_9, y_11, y_7, y_6, y_14, y_5, y_12
T140 (2) y_1, y_2, y_4, y_3, y_14, y_10, y_13, y_9, y_11, y_5, y_6, y_15, y_7, y_12, y_8
T141 (2) y_1, y_2, y_4, y_8, y_14, y_10, y_13, y_9, y_7, y_11, y_6, y_15, y_5, y_12, y_3
T142 (1) y_1, y_2, y_13, y_5, y_10, y_15, y_14, y_8, y_7, y_4, y_6, y_12, y_9, y_11, y_3
T143 (2) y_1, y_2, y_12, y_6, y_14, y_15, y_11, y_10, y_8, y_9, y_7, y_5, y_4, y_13, y_3
T144 (2) y_1, y_2, y_4, y_15, y_13, y_6, y_11, y_3, y_12, y_10, y_8, y_9, y_14, y_7, y_5
T145 (1) y_1, y_2, y_6, y_10, y_5, y_9, y_7, y_8, y_12, y_15, y_13, y_14, y_11, y_4, y_3
T146 (2) y_1, y_2, y_9, y_15, y_14, y_8, y_5, y_12, y_6, y_13, y_3, y_10, y_7, y_4, y_11
T147 (2) y_1, y_2, y_4, y_5, y_12, y_10, y_3, y_14, y_13, y_15, y_8, y_9, y_6, y_7, y_11
T148 (1) y_1, y_2, y_5, y_15, y_12, y_4, y_6, y_11, y_13, y_7, y_9, y_14, y_8, y_10, y_3
T149 (2) y_1, y_10, y_11, y_3, y_14, y_7, y_13, y_8, y_4, y_12, y_5, y_15, y_9, y_6, y_2
T150 (1) y_5, y_14, y_15, y_3, y_8, y_9, y_11, y_12, y_7, y_6, y_2, y_4, y_10, y_13, y_1
T151 (1) y_6, y_8, y_10, y_3, y_14, y_15, y_4, y_2, y_12, y_1, y_7, y_9, y_13, y_11, y_5
T152 (1) y_4, y_11, y_12, y_15, y_6, y_13, y_7, y_8, y_9, y_10, y_2, y_14, y_3, y_5, y_1
T153 (2) y_6, y_11, y_14, y_10, y_8, y_2, y_15, y_9, y_5, y_7, y_12, y_4, y_3, y_1, y_13
T154 (2) y_2, y_5, y_11, y_13, y_8, y_9, y_12, y_4, y_15, y_14, y_3, y_7, y_10, y_6, y_1
T155 (1) y_1, y_8, y_12, y_11, y_14, y_13, y_6, y_2, y_5, y_3, y_15, y_9, y_4, y_7, y_10
T156 (2) y_1, y_6, y_12, y_2, y_3, y_13, y_10, y_15, y_5, y_4, y_9, y_14, y_7, y_11, y_8
T157 (2) y_8, y_1, y_5, y_3, y_14, y_10, y_15, y_9, y_7, y_12, y_2, y_4, y_13, y_11, y_6
T158 (1) y_6, y_12, y_14, y_15, y_7, y_3, y_8, y_13, y_9, y_11, y_5, y_4, y_2, y_1, y_10
T159 (2) y_6, y_9, y_12, y_15, y_7, y_10, y_2, y_14, y_11, y_13, y_8, y_3, y_5, y_4, y_1
T160 (1) y_2, y_11, y_12, y_3, y_5, y_7, y_15, y_6, y_9, y_13, y_1, y_14, y_10, y_4, y_8
T161 (2) y_2, y_9, y_13, y_15, y_12, y_8, y_6, y_10, y_5, y_3, y_1, y_4, y_7, y_11, y_14
T162 (1) y_2, y_3, y_13, y_11, y_8, y_6, y_15, y_10, y_5, y_12, y_9, y_14, y_7, y_1, y_4
T163 (1) y_1, y_2, y_7, y_15, y_4, y_9, y_13, y_8, y_11, y_14, y_12, y_6, y_5, y_10, y_3
T164 (1) y_2, y_5, y_10, y_15, y_13, y_1, y_6, y_14, y_11, y_7, y_12, y_4, y_3, y_9, y_8
T165 (1) y_2, y_9, y_10, y_12, y_6, y_5, y_8, y_11, y_3, y_1, y_13, y_4, y_15, y_7, y_14
T166 (2) y_1, y_2, y_11, y_15, y_14, y_12, y_7, y_6, y_5, y_4, y_8, y_3, y_13, y_10, y_9
T167 (2) y_1, y_2, y_12, y_3, y_5, y_10, y_9, y_14, y_7, y_13, y_15, y_4, y_8, y_11, y_6
T168 (1) y_2, y_3, y_11, y_9, y_8, y_4, y_6, y_13, y_10, y_7, y_15, y_12, y_14, y_5, y_1
T169 (1) y_2, y_3, y_13, y_8, y_5, y_7, y_6, y_9, y_4, y_11, y_12, y_14, y_1, y_15, y_10
T170 (1) y_2, y_8, y_13, y_9, y_14, y_12, y_11, y_15, y_10, y_1, y_7, y_3, y_6, y_5, y_4
T171 (2) y_2, y_11, y_13, y_5, y_7, y_3, y_1, y_12, y_4, y_14, y_10, y_9, y_15, y_6, y_8
T172 (2) y_2, y_7, y_9, y_3, y_6, y_8, y_15, y_1, y_11, y_14, y_4, y_5, y_13, y_12, y_10
T173 (1) y_1, y_2, y_4, y_9, y_15, y_11, y_7, y_12, y_14, y_10, y_5, y_3, y_6, y_8, y_13
T174 (2) y_1, y_2, y_13, y_4, y_7, y_15, y_12, y_5, y_6, y_8, y_11, y_9, y_10, y_14, y_3
T175 (1) y_1, y_2, y_4, y_6, y_10, y_12, y_14, y_7, y_3, y_9, y_11, y_15, y_8, y_13, y_5
T176 (2) y_1, y_6, y_7, y_2, y_5, y_13, y_9, y_11, y_4, y_3, y_12, y_14, y_15, y_10, y_8
T177 (2) y_1, y_2, y_6, y_15, y_9, y_11, y_10, y_12, y_5, y_8, y_3, y_4, y_13, y_14, y_7
T178 (1) y_1, y_6, y_8, y_4, y_2, y_13, y_9, y_12, y_11, y_14, y_7, y_5, y_15, y_3, y_10
T179 (1) y_1, y_2, y_3, y_9, y_15, y_11, y_10, y_7, y_14, y_12, y_13, y_8, y_6, y_4, y_5
T180 (1) y_1, y_2, y_6, y_4, y_10, y_12, y_15, y_14, y_9, y_5, y_11, y_3, y_13, y_8, y_7
T181 (1) y_2, y_10, y_12, y_15, y_1, y_14, y_6, y_8, y_4, y_7, y_13, y_9, y_3, y_11, y_5
T182 (1) y_1, y_2, y_6, y_13, y_10, y_11, y_7, y_3, y_9, y_15, y_8, y_12, y_4, y_14, y_5
T183 (2) y_1, y_2, y_3, y_8, y_9, y_15, y_5, y_11, y_10, y_6, y_7, y_14, y_4, y_13, y_12
T184 (1) y_2, y_5, y_10, y_15, y_1, y_14, y_6, y_12, y_11, y_7, y_13, y_4, y_3, y_9, y_8
T185 (1) y_1, y_2, y_12, y_8, y_14, y_15, y_4, y_9, y_5, y_11, y_10, y_13, y_7, y_3, y_6
T186 (1) y_1, y_2, y_4, y_10, y_12, y_6, y_7, y_5, y_3, y_14, y_11, y_15, y_8, y_13, y_9
T187 (1) y_2, y_14, y_13, y_15, y_3, y_4, y_10, y_8, y_11, y_1, y_12, y_5, y_6, y_9, y_7
T188 (2) y_1, y_3, y_4, y_9, y_14, y_6, y_15, y_2, y_11, y_10, y_5, y_8, y_12, y_7, y_13
T189 (1) y_1, y_2, y_7, y_10, y_12, y_4, y_6, y_14, y_3, y_11, y_8, y_5, y_9, y_15, y_13
T190 (2) y_1, y_2, y_4, y_15, y_12, y_6, y_7, y_5, y_3, y_14, y_11, y_10, y_8, y_13, y_9
T191 (2) y_1, y_2, y_3, y_4, y_14, y_15, y_10, y_7, y_6, y_13, y_12, y_11, y_8, y_5, y_9
)";
  return kText;
}

}  // namespace tribuild

// Printed data for the verification suites: inequality lists with their
// certificates, congruence tables and closed-form positivity identities.
#pragma once

#include "qdissect/dissection.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdissect {

// One line per inequality: group residue index | text | certificate.
// Certificates list rank coefficients for classes 0..5, then crank
// coefficients for the classes named by crank_classes(residue).
inline constexpr std::string_view kInequalityText = R"(
thm-2.1 0 1 | N0+2N1+M1 >= 2N2+N4+M0 | (1,2,-2,0,-1,0;-1,1)_0=[0,11,0,0,0;0]_0
thm-2.1 0 2 | N0+2N1+3N2+M1 >= 3N3+3N5+M0 | (1,2,3,-3,0,-3;-1,1)_0=[0,-11,11,0,0;0]_0
thm-2.1 0 3 | 2N2+N3+N5 >= 4N4 | (0,0,2,1,-4,1;0,0)_0=[0,0,-11,11,0;0]_0
thm-2.1 0 4 | N2+5N3+3N4+M0 >= N0+2N1+6N5+M1 | (-1,-2,1,5,3,-6;1,-1)_0=[0,0,0,-11,11;0]_0
thm-2.1 1 1 | N0+4N2+N4+M0 >= 2N1+3N3+N5+M2 | (1,-2,4,-3,1,-1;1,0,-1)_1=[0,11,0,0,0;0]_1
thm-2.1 1 2 | N0+3N1+6N3+M0 >= 4N2+6N4+M2 | (1,3,-4,6,-6,0;1,0,-1)_1=[0,-11,11,0,0;0]_1
thm-2.1 1 3 | 2N1+6N4 >= N2+3N3+4N5 | (0,2,-1,-3,6,-4;0,0,0)_1=[0,0,-11,11,0;0]_1
thm-2.1 1 4 | N1+2N2+3N5+3M2 >= N0+N3+4N4+2M0+M1 | (-1,1,2,-1,-4,3;-2,-1,3)_1=[0,0,0,-11,11;0]_1
thm-2.1 1 5 | 3N2+2N3+N4+3M2 >= N0+N1+4N5+2M0+M1 | (-1,-1,3,2,1,-4;-2,-1,3)_1=[0,0,0,0,-11;11]_1
thm-2.1 2 1 | 3N2+N4 >= 2N0+2N5 | (-2,0,3,0,1,-2;0,0)_2=[0,0,0,0,0;11]_2
thm-2.1 2 2 | 2N1+2N3+N5+2M0 >= 2N2+3N4+2M2 | (0,2,-2,2,-3,1;2,-2)_2=[0,11,0,0,0;-11]_2
thm-2.1 2 3 | 3N0+2N2+M2 >= N1+N3+3N5+M0 | (3,-1,2,-1,0,-3;-1,1)_2=[0,-11,11,0,0;0]_2
thm-2.1 2 4 | 2N0+N1+N3+3N4+M0 >= 4N2+3N5+M2 | (2,1,-4,1,3,-3;1,-1)_2=[0,0,-11,11,0;0]_2
thm-2.1 2 5 | N0+3N1+N2+8N5+3M0 >= 8N3+5N4+3M2 | (1,3,1,-8,-5,8;3,-3)_2=[0,0,0,-11,11;0]_2
thm-2.1 3 1 | N0+2N3+M1 >= N1+2N5+M0 | (1,-1,0,2,0,-2;-1,1)_3=[0,11,0,0,0;0]_3
thm-2.1 3 2 | 5N1+2N2+2N4 >= 2N0+4N3+3N5 | (-2,5,2,-4,2,-3;0,0)_3=[0,-11,11,0,0;0]_3
thm-2.1 3 3 | 2N0+4N3+N5+M0 >= N1+3N2+3N4+M1 | (2,-1,-3,4,-3,1;1,-1)_3=[0,0,-11,0,0;11]_3
thm-2.1 3 4 | 6N2+3N5+5M1 >= N0+N1+2N3+5N4+5M0 | (-1,-1,6,-2,-5,3;-5,5)_3=[0,0,0,11,0;-11]_3
thm-2.1 3 5 | 4N0+2N1+4N4+3M0 >= 7N2+3N3+3M1 | (4,2,-7,-3,4,0;3,-3)_3=[0,0,0,-11,11;0]_3
thm-2.1 4 1 | 4N1+3N3+5M1 >= 2N0+3N2+N4+N5+5M0 | (-2,4,-3,3,-1,-1;-5,5)_4=[0,11,0,0,0;0]_4
thm-2.1 4 2 | 4N0+5N2+3M0 >= 5N1+2N3+N4+N5+3M1 | (4,-5,5,-2,-1,-1;3,-3)_4=[0,-11,11,0,0;0]_4
thm-2.1 4 3 | 3N1+N2+M0 >= 2N0+2N3+M1 | (-2,3,1,-2,0,0;1,-1)_4=[0,0,-11,11,0;0]_4
thm-2.1 4 4 | 3N0+N4+N5+M1 >= 3N2+2N3+M0 | (3,0,-3,-2,1,1;-1,1)_4=[0,0,0,-11,11;0]_4
thm-2.1 5 1 | 3N0+N2+N5+2M2 >= 2N1+3N3+2M0 | (3,-2,1,-3,0,1;-2,2)_5=[0,11,0,0,0;0]_5
thm-2.1 5 2 | 7N1+N4+3M2 >= 3N0+2N2+N3+2N5+3M0 | (-3,7,-2,-1,1,-2;-3,3)_5=[0,-11,11,0,0;0]_5
thm-2.1 5 3 | 2N0+N2+3N3+N5+4M0 >= 3N1+4N4+4M2 | (2,-3,1,3,-4,1;4,-4)_5=[0,0,-11,11,0;0]_5
thm-2.1 5 4 | 4N2+7N3+2N4 >= 4N0+2N1+7N5 | (-4,-2,4,7,2,-7;0,0)_5=[0,0,0,-11,11;0]_5
thm-2.1 5 5 | 4N1+N2+2N4+N5+5M2 >= 2N0+6N3+5M0 | (-2,4,1,-6,2,1;-5,5)_5=[0,0,11,0,0;-11]_5
thm-2.1 7 1 | N0+2N4+2M0 >= 2N3+N5+2M1 | (1,0,0,-2,2,-1;2,-2)_7=[0,11,0,0,0;0]_7
thm-2.1 7 2 | 3N0+N1+N2+7N3+4N5 >= 5N4+4M0+7M1 | (3,1,1,7,-5,4;-4,-7)_7=[0,-11,11,0,0;0]_7
thm-2.1 7 3 | 4N1+4N2+3N4+4M1 >= 4N0+6N3+N5+4M0 | (-4,4,4,-6,3,-1;-4,4)_7=[0,0,-11,11,0;0]_7
thm-2.1 7 4 | N0+5N3+2N4 >= 2N1+2N2+4N5 | (1,-2,-2,5,2,-4;0,0)_7=[0,0,0,-11,11;0]_7
thm-2.1 8 1 | N0+2N2+3N4+5M0 >= 3N1+3N5+5M1 | (1,-3,2,0,3,-3;5,-5)_8=[0,11,0,0,0;0]_8
thm-2.1 8 2 | 2N1+4N3+2N5+3M1 >= N0+2N2+5N4+3M0 | (-1,2,-2,4,-5,2;-3,3)_8=[0,-11,11,0,0;0]_8
thm-2.1 8 3 | 2N1+5N2+2N5+M1 >= 3N0+5N3+N4+M0 | (-3,2,5,-5,-1,2;-1,1)_8=[0,0,-11,11,0;0]_8
thm-2.1 8 4 | 7N0+4N1+5N4+4N5 >= 8N2+N3+4M0+7M1 | (7,4,-8,-1,5,4;-4,-7)_8=[0,0,0,-11,11;0]_8
thm-2.1 8 5 | 5N0+6N1+4N3+2N4 >= N2+5N5+6M0+5M1 | (5,6,-1,4,2,-5;-6,-5)_8=[0,0,0,-11,0;11]_8
thm-2.1 9 1 | 4N2+M0 >= 2N1+N3+N4+M1 | (0,-2,4,-1,-1,0;1,-1)_9=[0,11,0,0,0;0]_9
thm-2.1 9 2 | 4N1+N3+N4 >= N0+3N2+2N5 | (-1,4,-3,1,1,-2;0,0)_9=[0,-11,11,0,0;0]_9
thm-2.1 9 3 | 4N0+3N3+3N4+4M0 >= 2N1+5N2+3N5+4M1 | (4,-2,-5,3,3,-3;4,-4)_9=[0,0,-11,11,0;0]_9
thm-2.1 9 4 | 3N1+4N2+7N5+3M1 >= 2N0+6N3+6N4+3M0 | (-2,3,4,-6,-6,7;-3,3)_9=[0,0,0,-11,11;0]_9
thm-2.1 10 1 | 3N1+2N5+2M3 >= 2N2+2N3+N4+2M0 | (0,3,-2,-2,-1,2;-2,2)_10=[0,11,0,0,0;0]_10
thm-2.1 10 2 | 3N0+N2+N3+M0 >= 3N1+2N4+M3 | (3,-3,1,1,-2,0;1,-1)_10=[0,-11,11,0,0;0]_10
thm-2.1 10 3 | 2N1+4N4+M3 >= N0+N2+N3+3N5+M0 | (-1,2,-1,-1,4,-3;-1,1)_10=[0,0,-11,11,0;0]_10
thm-2.1 10 4 | 6N2+6N3+6M0+5M3 >= 6N0+6N1+3N4+8N5 | (-6,-6,6,6,-3,-8;6,5)_10=[0,0,0,-11,11;0]_10
cor-2.2 0 1 | M1 >= N4 | (0,0,0,0,-1,0;0,1)_0=[0,1,-2,2,0;0]_0
cor-2.2 0 2 | N2+N3 >= N4+M1 | (0,0,1,1,-1,0;0,-1)_0=[0,0,-4,3,1;0]_0
cor-2.2 1 1 | N2 >= M2 | (0,0,1,0,0,0;0,0,-1)_1=[0,1,0,-1,0;1]_1
cor-2.2 1 2 | M2 >= N4 | (0,0,0,0,0,-1;0,0,1)_1=[0,0,1,-1,1;0]_1
cor-2.2 1 3 | N2+N4 >= N3+N5 | (0,0,1,-1,1,-1;0,0,0)_1=[0,2,-2,1,0;1]_1
cor-2.2 2 1 | N1 >= M2 | (0,1,0,0,0,0;0,-1)_2=[0,2,-2,1,1;1]_2
cor-2.2 2 2 | M0 >= N5 | (0,0,0,0,0,-1;1,0)_2=[0,0,0,1,0;1]_2
cor-2.2 2 3 | 2M0 >= N2+N5 | (0,0,-1,0,0,-1;2,0)_2=[0,1,-2,2,0;0]_2
cor-2.2 2 4 | N2+M0 >= N0+N5 | (-1,0,1,0,0,-1;1,0)_2=[0,1,0,0,0;4]_2
cor-2.2 2 5 | N1+N3 >= M0+M2 | (0,1,0,1,0,0;-1,-1)_2=[0,3,-1,1,0;-1]_2
cor-2.2 2 6 | N1+N5 >= N4+M2 | (0,1,0,0,-1,1;0,-1)_2=[0,3,0,-1,1;-2]_2
cor-2.2 3 1 | N0 >= M0 | (1,0,0,0,0,0;-1,0)_3=[0,4,0,0,2;-2]_3
cor-2.2 3 2 | M1 >= N4 | (0,0,0,0,-1,0;0,1)_3=[0,-1,-1,1,0;1]_3
cor-2.2 3 3 | N0+M0 >= 2N2 | (1,0,-2,0,0,0;1,0)_3=[0,0,-2,-2,2;2]_3
cor-2.2 3 4 | N2+M1 >= N4+M0 | (0,0,1,0,-1,0;-1,1)_3=[0,1,0,2,0;-1]_3
cor-2.2 3 5 | N0+N3 >= N2+M1 | (1,0,-1,1,0,0;0,-1)_3=[0,2,-2,-1,1;2]_3
cor-2.2 4 1 | N1 >= M0 | (0,1,0,0,0,0;-1,0)_4=[0,1,-1,1,1;0]_4
cor-2.2 4 2 | 2N1 >= N0+M0 | (-1,2,0,0,0,0;-1,0)_4=[0,2,-4,4,0;0]_4
cor-2.2 4 3 | N1+M1 >= N2+M0 | (0,1,-1,0,0,0;-1,1)_4=[0,2,-1,-1,2;0]_4
cor-2.2 4 4 | N1+N3 >= 2M0 | (0,1,0,1,0,0;-2,0)_4=[0,2,1,0,0;0]_4
cor-2.2 5 1 | N2 >= M0 | (0,0,1,0,0,0;-1,0)_5=[0,1,0,1,1;-2]_5
cor-2.2 5 2 | M2 >= N5 | (0,0,0,0,0,-1;0,1)_5=[0,1,1,-1,1;1]_5
cor-2.2 5 3 | N2+N3 >= M0+M2 | (0,0,1,1,0,0;-1,-1)_5=[0,0,-1,1,1;-1]_5
cor-2.2 5 4 | N2+M2 >= N0+N5 | (-1,0,1,0,0,-1;0,1)_5=[0,0,1,0,2;-3]_5
cor-2.2 5 5 | N0+M0 >= N1+N4 | (1,-1,0,0,-1,0;1,0)_5=[0,2,-2,2,0;1]_5
cor-2.2 5 6 | N2+N3 >= N1+N5 | (0,-1,1,1,0,-1;0,0)_5=[0,2,-1,-1,2;0]_5
cor-2.2 5 7 | N0+N2 >= N1+M0 | (1,-1,1,0,0,0;-1,0)_5=[0,4,-1,0,1;0]_5
cor-2.2 7 1 | N0 >= M1 | (1,0,0,0,0,0;0,-1)_7=[1,3,1,-1,-1;0]_7
cor-2.2 7 2 | M0 >= N4 | (0,0,0,0,-1,0;1,0)_7=[0,-1,1,1,0;0]_7
cor-2.2 7 3 | N3+N4 >= N5+M0 | (0,0,0,1,1,-1;-1,0)_7=[0,0,-1,-2,3;0]_7
cor-2.2 8 1 | N2 >= M1 | (0,0,1,0,0,0;0,-1)_8=[1,1,0,1,0;0]_8
cor-2.2 8 2 | M0 >= N3 | (0,0,0,-1,0,0;1,0)_8=[0,1,-1,1,1;0]_8
cor-2.2 8 3 | M0+M1 >= N2+N4 | (0,0,-1,0,-1,0;1,1)_8=[0,-1,2,0,1;0]_8
cor-2.2 8 4 | N1+N5 >= 2N3 | (0,1,0,-2,0,1;0,0)_8=[0,0,-3,2,2;0]_8
cor-2.2 8 5 | N0+M0 >= 2N2 | (1,0,-2,0,0,0;1,0)_8=[0,0,2,-2,2;0]_8
cor-2.2 8 6 | N3+M0 >= N4+M1 | (0,0,0,1,-1,0;1,-1)_8=[0,0,4,1,1;0]_8
cor-2.2 8 7 | N2+N3 >= 2M1 | (0,0,1,1,0,0;0,-2)_8=[0,1,2,1,0;0]_8
cor-2.2 8 8 | 2M0 >= N1+N5 | (0,-1,0,0,0,-1;2,0)_8=[0,2,1,0,0;0]_8
cor-2.2 9 1 | N2 >= M1 | (0,0,1,0,0,0;0,-1)_9=[0,2,1,0,0;0]_9
cor-2.2 9 2 | M0 >= N5 | (0,0,0,0,0,-1;1,0)_9=[0,1,2,1,0;0]_9
cor-2.2 9 3 | M1+M0 >= N2+N5 | (0,0,-1,0,0,-1;1,1)_9=[0,-1,1,1,0;0]_9
cor-2.2 9 4 | N0+M0 >= N2+M1 | (1,0,-1,0,0,0;1,-1)_9=[0,0,-3,2,2;0]_9
cor-2.2 9 5 | N2+N5 >= N3+N4 | (0,0,1,-1,-1,1;0,0)_9=[0,2,-1,-1,2;0]_9
cor-2.2 10 1 | N1 >= M0 | (0,1,0,0,0,0;-1,0)_10=[1,2,-1,0,0;0]_10
cor-2.2 10 2 | M3 >= N4 | (0,0,0,0,-1,0;0,1)_10=[0,2,2,-1,1;0]_10
cor-2.2 10 3 | N0+M0 >= N1+N4 | (1,-1,0,0,-1,0;1,0)_10=[0,-3,4,0,0;0]_10
cor-2.2 10 4 | N2+N3 >= 2M0 | (0,0,1,1,0,0;-2,0)_10=[0,0,1,-1,1;0]_10
cor-2.2 10 5 | N1+N4 >= 2M0 | (0,1,0,0,1,0;-2,0)_10=[0,1,-2,2,0;0]_10
cor-2.2 10 6 | N1+M3 >= N2+N3 | (0,1,-1,-1,0,0;0,1)_10=[0,3,-1,2,0;0]_10
cor-2.3 0 1 | N2+2N3 >= N5+2M1 | (0,0,1,2,0,-1;0,-2)_0=[0,1,-3,0,3;0]_0
cor-2.3 0 2 | 2N3+N4 >= 2N5+M1 | (0,0,0,2,1,-2;0,-1)_0=[0,3,0,-4,4;0]_0
cor-2.3 0 3 | 3M1 >= N2+N4+N5 | (0,0,-1,0,-1,-1;0,3)_0=[0,4,-1,0,1;0]_0
cor-2.3 0 4 | N3+2M1 >= N2+2N5 | (0,0,-1,1,0,-2;0,2)_0=[0,5,0,-3,3;0]_0
cor-2.3 1 1 | 2N1+N3 >= N2+2N4 | (0,2,-1,1,-2,0;0,0,0)_1=[0,-4,1,-1,4;0]_1
cor-2.3 1 2 | 2N1+N4 >= N2+2N5 | (0,2,-1,0,1,-2;0,0,0)_1=[0,-3,-3,4,1;1]_1
cor-2.3 1 3 | N1+2N4 >= 2N5+M0 | (0,1,0,0,2,-2;-1,0,0)_1=[1,-2,-4,3,-3;2]_1
cor-2.3 1 4 | N1+N3+N5 >= 3N4 | (0,1,0,1,-3,1;0,0,0)_1=[0,-2,3,-4,4;0]_1
cor-2.3 1 5 | 2N2+N4 >= 2N5+M0 | (0,0,2,0,1,-2;-1,0,0)_1=[1,1,-2,0,-4;4]_1
cor-2.3 2 1 | N0+N1+N4 >= N2+M0+M2 | (1,1,-1,0,1,0;-1,-1)_2=[0,0,-4,3,1;0]_2
cor-2.3 2 2 | 3M0 >= N2+N3+N4 | (0,0,-1,-1,-1,0;3,0)_2=[0,1,-1,0,1;-1]_2
cor-2.3 2 3 | N1+N2+N5 >= 2M0+M2 | (0,1,1,0,0,1;-2,-1)_2=[0,1,0,-1,1;1]_2
cor-2.3 2 4 | 3M0 >= N0+N4+N5 | (-1,0,0,0,-1,-1;3,0)_2=[0,3,0,0,0;1]_2
cor-2.3 2 5 | N1+N3+M0 >= N0+2N5 | (-1,1,0,1,0,-2;1,0)_2=[1,4,-4,2,-1;3]_2
cor-2.3 2 6 | N1+N3+M0 >= N2+N5+M2 | (0,1,-1,1,0,-1;1,-1)_2=[0,4,-3,3,0;-1]_2
cor-2.3 2 7 | N1+2M0 >= N2+N4+M2 | (0,1,-1,0,-1,0;2,-1)_2=[0,4,-2,1,1;-2]_2
cor-2.3 2 8 | N1+N2+N3 >= N0+N5+M2 | (-1,1,1,1,0,-1;0,-1)_2=[0,4,-1,1,0;3]_2
cor-2.3 2 9 | N1+N2+M0 >= N0+N4+M2 | (-1,1,1,0,-1,0;1,-1)_2=[0,4,0,-1,1;2]_2
cor-2.3 3 1 | 2N1+N4 >= N3+N5+M1 | (0,2,0,-1,1,-1;0,-1)_3=[0,-3,3,-1,1;1]_3
cor-2.3 3 2 | N0+N1+N5 >= M0+2M1 | (1,1,0,0,0,1;-1,-2)_3=[0,-1,-1,0,2;0]_3
cor-2.3 3 3 | N0+N1+N4 >= N2+2M1 | (1,1,-1,0,1,0;0,-2)_3=[0,0,0,-2,2;1]_3
cor-2.3 3 4 | M0+2M1 >= N2+N3+N5 | (0,0,-1,-1,0,-1;1,2)_3=[0,0,1,-1,1;0]_3
cor-2.3 3 5 | 2N0+N5 >= 2N2+N4 | (2,0,-2,0,-1,1;0,0)_3=[0,1,-4,-1,4;1]_3
cor-2.3 3 6 | N0+N3+N5 >= N4+M0+M1 | (1,0,0,1,-1,1;-1,-1)_3=[0,1,-3,1,1;1]_3
cor-2.3 3 7 | 3M1 >= N1+2N4 | (0,-1,0,0,-2,0;0,3)_3=[0,1,-2,2,0;0]_3
cor-2.3 3 8 | 2N2+N5 >= N4+2M0 | (0,0,2,0,-1,1;-2,0)_3=[0,1,0,3,0;-3]_3
cor-2.3 3 9 | N0+N3+M1 >= N1+2N4 | (1,-1,0,1,-2,0;0,1)_3=[1,4,-4,1,0;0]_3
cor-2.3 3 10 | N0+2N3 >= M0+2M1 | (1,0,0,2,0,0;-1,-2)_3=[0,4,-2,0,0;2]_3
cor-2.3 4 1 | 2N0+M0 >= N1+2N3 | (2,-1,0,-2,0,0;1,0)_4=[0,-3,1,-3,5;0]_4
cor-2.3 4 2 | 2N0+N2 >= N1+N3+M1 | (2,-1,1,-1,0,0;0,-1)_4=[0,-3,3,-2,3;0]_4
cor-2.3 4 3 | N0+N2+M1 >= N1+N4+N5 | (1,-1,1,0,-1,-1;0,1)_4=[0,-1,5,0,0;0]_4
cor-2.3 4 4 | N0+N2+N3 >= N4+N5+M0 | (1,0,1,1,-1,-1;-1,0)_4=[1,0,5,-1,-1;0]_4
cor-2.3 4 5 | N0+2M1 >= 2N2+N3 | (1,0,-2,-1,0,0;0,2)_4=[0,1,0,-5,5;0]_4
cor-2.3 4 6 | 3M1 >= N2+N4+N5 | (0,0,-1,0,-1,-1;0,3)_4=[0,2,2,-1,1;0]_4
cor-2.3 5 1 | 2N3+M0 >= 2N5+M2 | (0,0,0,2,0,-2;1,-1)_5=[1,-1,-1,-3,1;4]_5
cor-2.3 5 2 | N2+2N3 >= N0+2N5 | (-1,0,1,2,0,-2;0,0)_5=[0,-1,0,-1,3;0]_5
cor-2.3 5 3 | N3+M0+M2 >= N0+2N5 | (-1,0,0,1,0,-2;1,1)_5=[0,-1,1,-2,2;1]_5
cor-2.3 5 4 | N3+2M0 >= N1+N4+N5 | (0,-1,0,1,-1,-1;2,0)_5=[0,0,-2,1,1;1]_5
cor-2.3 5 5 | 2N2+N3 >= N0+N5+M0 | (-1,0,2,1,0,-1;-1,0)_5=[0,0,0,1,3;-4]_5
cor-2.3 5 6 | N1+N2+N5 >= N3+2M0 | (0,1,1,-1,0,1;-2,0)_5=[0,0,1,3,0;-4]_5
cor-2.3 5 7 | M0+2M2 >= N0+N3+N5 | (-1,0,0,-1,0,-1;1,2)_5=[0,0,2,-1,1;-2]_5
cor-2.3 5 8 | N1+N2+N4 >= 3M0 | (0,1,1,0,1,0;-3,0)_5=[0,1,2,-1,1;-1]_5
cor-2.3 5 9 | N0+N2+N5 >= 2M0+M2 | (1,0,1,0,0,1;-2,-1)_5=[0,2,-1,2,0;-1]_5
cor-2.3 7 1 | N1+N2+M1 >= N0+N5+M0 | (-1,1,1,0,0,-1;-1,1)_7=[0,-3,-2,2,3;0]_7
cor-2.3 7 2 | N1+N2+M1 >= N0+N3+N4 | (-1,1,1,-1,-1,0;0,1)_7=[0,-3,-1,4,0;0]_7
cor-2.3 7 3 | M0+2M1 >= N0+2N5 | (-1,0,0,0,0,-2v1,2)_7=[0,-2,-2,0,4;0]_7
cor-2.3 7 4 | N0+2N3 >= M0+2M1 | (1,0,0,2,0,0;-1,-2)_7=[0,0,2,-2,2;0]_7
cor-2.3 7 5 | N1+N2+N4 >= 2M0+M1 | (0,1,1,0,1,0;-2,-1)_7=[0,1,-1,1,1;0]_7
cor-2.3 8 1 | N1+N5+M1 >= N2+N3+N4 | (0,1,-1,-1,-1,1;0,1)_8=[0,-2,0,1,2;0]_8
cor-2.3 8 2 | M0+2M1 >= N0+2N4 | (-1,0,0,0,-2,0;1,2)_8=[0,-2,2,2,0;0]_8
cor-2.3 8 3 | N1+N2+N5 >= N0+2N4 | (-1,1,1,0,-2,1;0,0)_8=[0,-2,2,4,1;0]_8
cor-2.3 8 4 | N1+N3+N5 >= N4+M0+M1 | (0,1,0,1,-1,1;-1,-1)_8=[0,-2,3,1,1;0]_8
cor-2.3 8 5 | N1+N5+M0 >= N2+2N4 | (0,1,-1,0,-2,1;1,0)_8=[0,-2,4,2,3;0]_8
cor-2.3 8 6 | N0+N1+N5 >= 2N2+N3 | (1,1,-2,-1,0,1;0,0)_8=[0,-1,0,-1,3;0]_8
cor-2.3 8 7 | N2+N3+M0 >= N0+2N4 | (-1,0,1,1,-2,0;1,0)_8=[0,-1,4,3,0;0]_8
cor-2.3 8 8 | N2+M0+M1 >= N0+N3+N4 | (-1,0,1,-1,-1,0;1,1)_8=[0,0,-1,3,0;0]_8
cor-2.3 8 9 | N1+N2+N5 >= M0+2M1 | (0,1,1,0,0,1;-1,-2)_8=[0,0,0,2,1;0]_8
cor-2.3 8 10 | N0+N1+N5 >= N2+2M1 | (1,1,-1,0,0,1;0,-2)_8=[0,0,2,0,3;0]_8
cor-2.3 8 11 | 2N2+M0 >= N0+N4+M1 | (-1,0,2,0,-1,0;1,-1)_8=[0,1,1,4,0;0]_8
cor-2.3 8 12 | N0+N3+M0 >= N2+2M1 | (1,0,-1,1,0,0;1,-2)_8=[0,1,4,-1,2;0]_8
cor-2.3 8 13 | 2N2+M0 >= N0+2N3 | (-1,0,2,-2,0,0;1,0)_8=[0,2,-4,4,0;0]_8
cor-2.3 8 14 | N0+N4+M0 >= N2+N3+M1 | (1,0,-1,-1,1,0;1,-1)_8=[0,2,-1,-1,2;0]_8
cor-2.3 8 15 | N0+N3+N4 >= 3M1 | (1,0,0,1,1,0;0,-3)_8=[0,2,2,-1,1;0]_8
cor-2.3 8 16 | 2N2+N4 >= 3M1 | (0,0,2,0,1,0;0,-3)_8=[0,3,-1,2,0;0]_8
cor-2.3 9 1 | 2N1+M1 >= N0+N3+N4 | (-1,2,0,-1,-1,0;0,1)_9=[0,-3,6,-2,2;0]_9
cor-2.3 9 2 | N0+N3+N4 >= N2+N5+M1 | (1,0,-1,1,1,-1;0,-1)_9=[1,-1,-2,2,-1;0]_9
cor-2.3 9 3 | M0+2M1 >= N2+N3+N4 | (0,0,-1,-1,-1,0;1,2)_9=[0,-1,-1,0,2;0]_9
cor-2.3 9 4 | N0+N5+M0 >= N2+N3+N4 | (1,0,-1,-1,-1,1;1,0)_9=[0,0,-5,1,4;0]_9
cor-2.3 9 5 | N1+N2+N5 >= M0+2M1 | (0,1,1,0,0,1;-1,-2)_9=[0,0,1,-1,1;0]_9
cor-2.3 9 6 | N0+N3+N4 >= 3M1 | (1,0,0,1,1,0;0,-3)_9=[0,1,-2,2,0;0]_9
cor-2.3 9 7 | N0+2M0 >= N1+N2+N5 | (1,-1,-1,0,0,-1;2,0)_9=[0,2,-3,3,1;0]_9
cor-2.3 9 8 | N0+N2+N5 >= 3M1 | (1,0,1,0,0,1;0,-3)_9=[0,3,-3,1,2;0]_9
cor-2.3 9 9 | N0+2M0 >= N1+N3+N4 | (1,-1,0,-1,-1,0;2,0)_9=[0,4,-4,2,3;0]_9
cor-2.3 9 10 | N2+M0+M1 >= N1+N3+N4 | (0,-1,1,-1,-1,0;1,1)_9=[0,4,-1,0,1;0]_9
cor-2.3 9 11 | N0+N2+M0 >= N1+2M1 | (1,-1,1,0,0,0;1,-2)_9=[0,5,-3,2,1;0]_9
cor-2.3 9 12 | N0+N2+M0 >= 2N1+N5 | (1,-2,1,0,0,-1;1,0)_9=[1,6,-4,2,-1;0]_9
cor-2.3 10 1 | N0+N2+N3 >= N1+N4+M0 | (1,-1,1,1,-1,0;-1,0)_10=[0,-3,5,-1,1;0]_10
cor-2.3 10 2 | 2M0+M3 >= N1+N4+N5 | (0,-1,0,0,-1,-1;2,1)_10=[0,-1,2,0,1;0]_10
cor-2.3 10 3 | N2+N3+M3 >= N1+N4+N5 | (0,-1,1,1,-1,-1;0,1)_10=[0,-1,3,-1,2;0]_10
cor-2.3 10 4 | N4+M0+M3 >= N0+2N5 | (-1,0,0,0,1,-2;1,1)_10=[0,0,-4,3,1;0]_10
cor-2.3 10 5 | N2+N3+M3 >= N0+N5+M0 | (-1,0,1,1,0,-1;-1,1)_10=[0,2,-1,-1,2;0]_10
cor-2.3 10 6 | 2M0+M3 >= N2+N3+N4 | (0,0,-1,-1,-1,0;2,1)_10=[0,2,1,0,0;0]_10
cor-2.3 10 7 | N0+N1+N5 >= N2+N3+N4 | (1,1,-1,-1,-1,1;0,0)_10=[1,2,2,0,-1;0]_10
cor-2.3 10 8 | M0+2M3 >= N0+N4+N5 | (-1,0,0,0,-1,-1;1,2)_10=[0,4,0,-1,2;0]_10
cor-2.3 10 9 | 2N1+N5 >= N2+N3+M0 | (0,2,-1,-1,0,1;-1,0)_10=[1,5,-2,0,-1;0]_10
cor-2.3 10 10 | N1+2M3 >= N0+N5+M0 | (-1,1,0,0,0,-1;-1,2)_10=[0,5,-2,1,2;0]_10
cor-2.3 10 11 | 2N1+N5 >= 3M0 | (0,2,0,0,0,1;-3,0)_10=[1,5,-1,-1,0;0]_10
thm-2.4 6 1 | 2N1+N2+2N4 >= 2N3+3N5 | (0,2,1,-2,2,-3)_6=Theta(0,0,0,0,11)
thm-2.4 6 2 | 2N0+N2+2N5 >= 2N1+N3+2N4 | (2,-2,1,-1,-2,2)_6=Theta(0,0,0,11,-11)
thm-2.4 6 3 | N0+N1+3N3+N4 >= 4N2+2N5 | (1,1,-4,3,1,-2)_6=Theta(0,0,11,-11,0)
thm-2.4 6 4 | N0+6N1+4N2 >= 2N3+5N4+4N5 | (1,6,4,-2,-5,-4)_6=Theta(0,11,-11,0,0)
cor-2.6 6 1 | N0+N3 >= N1+N4 | (1,-1,0,1,-1,0)_6=Theta(2,0,3,3,-6)
cor-2.6 6 2 | N1+N2+N4 >= N3+2N5 | (0,1,1,-1,1,-2)_6=Theta(1,0,0,1,6)
cor-2.6 6 3 | N2+2N3 >= N1+N4+N5 | (0,-1,1,2,-1,-1)_6=Theta(5,0,2,2,-4)
cor-2.6 6 4 | N0+N1+N4 >= N2+2N5 | (1,1,-1,0,1,-2)_6=Theta(0,0,5,-2,3)
cor-2.6 6 5 | 3N3 >= N2+2N5 | (0,0,-1,3,0,-2)_6=Theta(4,0,6,-5,-1)
cor-2.6 6 6 | N0+2N3 >= 2N2+N5 | (1,0,-2,2,0,-1)_6=Theta(1,0,7,-4,-3)
cor-2.5 6 1 | N0 >= P | (1,0,0,0,0,0)_6=Theta(0,0,1,1,-1)
cor-2.5 6 2 | P >= N5 | (0,0,0,0,0,-1)_6=Theta(1,0,1,0,1)
)";

/// Crank classes carried by the certificates of each residue (none at 6).
inline const std::vector<int>& crank_classes(int m) {
  check_residue(m, true);
  static const std::array<std::vector<int>, 11> classes{{
      {0, 1}, {0, 1, 2}, {0, 2}, {0, 1}, {0, 1}, {0, 2}, {}, {0, 1}, {0, 1}, {0, 1}, {0, 3},
  }};
  return classes[static_cast<std::size_t>(m)];
}

/// Integer combination of N_i, M_i (i = 0..5) and p/11, all at one argument.
struct LinearForm {
  std::array<long, 6> N{};
  std::array<long, 6> M{};
  long P = 0;

  friend LinearForm operator-(LinearForm a, const LinearForm& b) {
    for (int i = 0; i < 6; ++i) {
      a.N[static_cast<std::size_t>(i)] -= b.N[static_cast<std::size_t>(i)];
      a.M[static_cast<std::size_t>(i)] -= b.M[static_cast<std::size_t>(i)];
    }
    a.P -= b.P;
    return a;
  }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  /// Sum of all coefficients, counting p/11 as one class.
  long weight() const {
    long s = P;
    for (int i = 0; i < 6; ++i) s += N[static_cast<std::size_t>(i)] + M[static_cast<std::size_t>(i)];
    return s;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\n' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\n' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

/// Strict decimal integer with optional sign; nullopt on anything else.
inline std::optional<long> parse_long(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return std::nullopt;
  long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  return negative ? -v : v;
}

inline std::optional<std::vector<long>> parse_longs(std::string_view s) {
  std::vector<long> out;
  for (auto part : split(s, ',')) {
    auto v = parse_long(part);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

}  // namespace detail

/// Parses sums like "N0+2N1+M1" or "2M2" or "P" (P stands for p/11).
inline LinearForm parse_linear(std::string_view text) {
  LinearForm f;
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("bad linear form '" + std::string(text) + "'"); };
  bool any = false;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      fail();
    }
    while (i < text.size() && text[i] == ' ') ++i;
    long c = 0;
    bool digits = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      c = c * 10 + (text[i++] - '0');
      digits = true;
    }
    if (!digits) c = 1;
    if (i >= text.size()) fail();
    char kind = text[i++];
    if (kind == 'P') {
      f.P += sign * c;
    } else if (kind == 'N' || kind == 'M') {
      if (i >= text.size() || text[i] < '0' || text[i] > '5') fail();
      auto idx = static_cast<std::size_t>(text[i++] - '0');
      (kind == 'N' ? f.N : f.M)[idx] += sign * c;
    } else {
      fail();
    }
    any = true;
  }
  if (!any) fail();
  return f;
}

/// "(r0..r5;c..)_m=[c1..c5;c6]_m" or "(r0..r5)_6=Theta(a1..a5)".
struct Certificate {
  int m = 0;
  LinearForm form;
  bool theta = false;
  ResidueCoeffs rhs{};
};

inline std::optional<Certificate> parse_certificate(std::string_view text) {
  using detail::parse_long;
  using detail::parse_longs;
  Certificate c;
  auto eq = text.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  auto lhs = detail::trim(text.substr(0, eq));
  auto rhs = detail::trim(text.substr(eq + 1));
  if (lhs.size() < 4 || lhs.front() != '(') return std::nullopt;
  auto close = lhs.find(")_");
  if (close == std::string_view::npos) return std::nullopt;
  auto m = parse_long(lhs.substr(close + 2));
  if (!m || *m < 0 || *m > 10) return std::nullopt;
  c.m = static_cast<int>(*m);
  auto inner = lhs.substr(1, close - 1);
  auto semi = inner.find(';');
  auto rank = parse_longs(inner.substr(0, semi));
  if (!rank || rank->size() != 6) return std::nullopt;
  for (std::size_t i = 0; i < 6; ++i) c.form.N[i] = (*rank)[i];
  const auto& classes = crank_classes(c.m);
  if (semi != std::string_view::npos) {
    auto crank = parse_longs(inner.substr(semi + 1));
    if (!crank || crank->size() != classes.size()) return std::nullopt;
    for (std::size_t i = 0; i < classes.size(); ++i) c.form.M[static_cast<std::size_t>(classes[i])] = (*crank)[i];
  } else if (!classes.empty()) {
    return std::nullopt;
  }
  if (rhs.rfind("Theta(", 0) == 0) {
    if (c.m != 6 || rhs.back() != ')') return std::nullopt;
    auto v = parse_longs(rhs.substr(6, rhs.size() - 7));
    if (!v || v->size() != 5) return std::nullopt;
    c.theta = true;
    for (std::size_t i = 0; i < 5; ++i) c.rhs[i] = (*v)[i];
    return c;
  }
  if (c.m == 6 || rhs.empty() || rhs.front() != '[') return std::nullopt;
  auto rclose = rhs.find("]_");
  if (rclose == std::string_view::npos) return std::nullopt;
  auto rm = parse_long(rhs.substr(rclose + 2));
  if (!rm || *rm != c.m) return std::nullopt;
  auto body = rhs.substr(1, rclose - 1);
  auto rsemi = body.find(';');
  if (rsemi == std::string_view::npos) return std::nullopt;
  auto head = parse_longs(body.substr(0, rsemi));
  auto tail = parse_long(body.substr(rsemi + 1));
  if (!head || head->size() != 5 || !tail) return std::nullopt;
  for (std::size_t i = 0; i < 5; ++i) c.rhs[i] = (*head)[i];
  c.rhs[5] = *tail;
  return c;
}

struct InequalityRow {
  std::string group;  // check-id prefix, e.g. "thm-2.1"
  int m = 0;
  int index = 0;
  std::string text;
  LinearForm form;  // left minus right; the claim is form >= 0
  std::string certificate_text;
  std::optional<Certificate> certificate;

  std::string id() const { return group + "-m" + std::to_string(m) + "-" + std::to_string(index); }
};

inline const std::vector<InequalityRow>& inequality_rows() {
  static const std::vector<InequalityRow> rows = [] {
    std::vector<InequalityRow> out;
    for (auto line : detail::split(kInequalityText, '\n')) {
      if (line.empty()) continue;
      auto fields = detail::split(line, '|');
      if (fields.size() != 3) throw std::logic_error("malformed inequality line");
      auto head = detail::split(fields[0], ' ');
      InequalityRow r;
      r.group = std::string(head.at(0));
      r.m = static_cast<int>(*detail::parse_long(head.at(1)));
      r.index = static_cast<int>(*detail::parse_long(head.at(2)));
      r.text = std::string(fields[1]);
      auto ge = fields[1].find(">=");
      r.form = parse_linear(fields[1].substr(0, ge)) - parse_linear(fields[1].substr(ge + 2));
      r.certificate_text = std::string(fields[2]);
      r.certificate = parse_certificate(fields[2]);
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

// ---------------------------------------------------------------------------
// Equalities and congruences among counts

/// Crank equalities per residue; each string is a chain "A=B=..." of linear forms.
inline const std::array<std::vector<std::string>, 11>& crank_equalities() {
  static const std::array<std::vector<std::string>, 11> t{{
      {"M1=M2=M3=M4=M5"},
      {"M0+M1=2M2", "M2=M3=M4=M5"},
      {"M0=M1=M3=M4=M5"},
      {"M0=M3", "M1=M2=M4=M5"},
      {"M0=M2=M4", "M1=M3=M5"},
      {"M0=M1=M3=M5", "M2=M4"},
      {"M0=M1=M2=M3=M4=M5=P"},
      {"M0=M2=M3=M5", "M1=M4"},
      {"M0=M2=M5", "M1=M3=M4"},
      {"M0=M4", "M1=M2=M3=M5"},
      {"M0=M1=M2=M4=M5"},
  }};
  return t;
}

/// sum p(11n+m) q^n == c_m J11^2 prefix_m (mod 11); residue 6 has no entry.
inline constexpr std::array<long, 11> kPartitionCongruence{1, 1, 2, 3, 5, 7, 0, 4, 6, 8, 9};

/// Linear rank congruences: sum_i c_i N(i,11,11n+m) == 0 (mod 11).
inline constexpr std::array<std::array<long, 6>, 11> kRankCongruence{{
    {0, 0, 1, -5, -2, 6},
    {0, 1, -6, 4, 3, -2},
    {1, 0, 4, 0, -6, 1},
    {1, 3, -1, 2, -1, -4},
    {1, 3, -2, -4, 1, 1},
    {1, -5, -1, 1, 5, -1},
    {0, 1, -5, -1, 1, 4},
    {1, -2, -2, 5, 2, -4},
    {1, 5, 2, 1, -3, -6},
    {1, -4, 3, -1, -1, 2},
    {1, -6, 0, 0, 1, 4},
}};

/// The residue-0 derivation: Q_{2,0} - 5Q_{3,0} - 2Q_{4,0} + 6Q_{5,0} = 11[0,-1,0,1,-1;0]_0.
inline constexpr ResidueCoeffs kRankCongruenceWitness{0, -11, 0, 11, -11, 0};

/// Right side of a mod-11 congruence in the dissected variable.
struct CongruenceRhs {
  enum class Kind { Zero, Residue, Theta, Unit } kind = Kind::Zero;
  ResidueCoeffs c{};  // Residue: [c1..c5;c6]_m, Theta: first five, Unit: c[0] J11^2 prefix_m
  long mock = 0;      // extra mock * q^2 g(q^2; q^11)
};

inline CongruenceRhs residue_rhs(ResidueCoeffs c, long mock = 0) { return {CongruenceRhs::Kind::Residue, c, mock}; }
inline CongruenceRhs theta_rhs(ThetaCoeffs a) { return {CongruenceRhs::Kind::Theta, {a[0], a[1], a[2], a[3], a[4], 0}, 0}; }
inline CongruenceRhs unit_rhs(long c) { return {CongruenceRhs::Kind::Unit, {c, 0, 0, 0, 0, 0}, 0}; }

struct MomentCongruence {
  std::string id;
  int k;  // moment order; 0 means spt
  int m;
  CongruenceRhs rhs;
};

/// spt(11n+m) congruences.
inline const std::vector<MomentCongruence>& spt_congruences() {
  static const std::vector<MomentCongruence> t{
      {"thm-2.7-m1", 0, 1, residue_rhs({1, 5, -4, 1, -5, 1})},
      {"thm-2.7-m2", 0, 2, residue_rhs({3, -5, 3, -2, 5, -5})},
      {"thm-2.7-m3", 0, 3, residue_rhs({5, 2, -2, -4, 4, 4})},
      {"thm-2.7-m5", 0, 5, residue_rhs({3, 1, 3, 4, -4, -3})},
      {"thm-2.7-m6", 0, 6, theta_rhs({2, 4, 5, 3, 1})},
      {"thm-2.7-m8", 0, 8, residue_rhs({-1, -2, 2, -1, 3, 2})},
  };
  return t;
}

/// Rank moment congruences T_{k,m}.
inline const std::vector<MomentCongruence>& rank_moment_congruences() {
  static const std::vector<MomentCongruence> t{
      {"thm-2.8-k2-m1", 2, 1, residue_rhs({0, -1, -5, -4, -3, -2})},
      {"thm-2.8-k4-m1", 4, 1, CongruenceRhs{}},
      {"thm-2.8-k6-m1", 6, 1, residue_rhs({0, -1, -4, 2, 5, 3})},
      {"thm-2.8-k8-m1", 8, 1, residue_rhs({0, 5, 1, 4, -4, -3})},
      {"thm-2.8-k2-m2", 2, 2, residue_rhs({2, 2, -3, -4, 4, -1})},
      {"thm-2.8-k4-m2", 4, 2, residue_rhs({2, 5, -1, 0, 3, 1})},
      {"thm-2.8-k6-m2", 6, 2, residue_rhs({2, 4, -2, 2, 5, 3})},
      {"thm-2.8-k8-m2", 8, 2, residue_rhs({2, -1, 2, 4, 1, 5})},
      {"thm-2.8-k2-m3", 2, 3, residue_rhs({-3, 0, -3, 1, -4, 3})},
      {"thm-2.8-k4-m3", 4, 3, residue_rhs({-1, -4, 2, 5, 4, 5})},
      {"thm-2.8-k6-m3", 6, 3, residue_rhs({-4, 0, 3, 3, -2, 5})},
      {"thm-2.8-k8-m3", 8, 3, residue_rhs({-5, 2, 0, 4, -5, 5})},
      {"thm-2.8-k2-m5", 2, 5, residue_rhs({-2, 5, 1, -1, 4, -5})},
      {"thm-2.8-k4-m5", 4, 5, residue_rhs({-4, 3, -3, 5, -4, -2})},
      {"thm-2.8-k6-m5", 6, 5, residue_rhs({-5, 2, -1, 0, 2, 1})},
      {"thm-2.8-k8-m5", 8, 5, residue_rhs({4, 0, -2, 2, 5, -3})},
      {"thm-2.8-k2-m6", 2, 6, theta_rhs({-4, 3, 1, 5, -2})},
      {"thm-2.8-k4-m6", 4, 6, theta_rhs({-2, -4, -5, -3, -1})},
      {"thm-2.8-k6-m6", 6, 6, theta_rhs({1, 5, -5, 4, 2})},
      {"thm-2.8-k8-m6", 8, 6, theta_rhs({-5, -5, 1, -2, -2})},
      {"thm-2.8-k2-m8", 2, 8, residue_rhs({-1, -4, -1, 5, -3, -4})},
      {"thm-2.8-k4-m8", 4, 8, residue_rhs({-3, 5, -5, -3, -2, -5})},
      {"thm-2.8-k6-m8", 6, 8, residue_rhs({3, 4, 3, -3, 1, 3})},
      {"thm-2.8-k8-m8", 8, 8, residue_rhs({0, 2, -1, 5, -1, 5})},
  };
  return t;
}

/// Residue-0 congruences with a mock part; k = 0 is spt.
inline const std::vector<MomentCongruence>& residue0_mock_congruences() {
  static const std::vector<MomentCongruence> t{
      {"remark-mock-k2", 2, 0, residue_rhs({0, 0, 4, 5, 1, -2}, 2)},
      {"remark-mock-k4", 4, 0, residue_rhs({0, 0, 4, 5, 1, -2}, 2)},
      {"remark-mock-k6", 6, 0, residue_rhs({0, 3, -2, 1, -4, -2}, 2)},
      {"remark-mock-k8", 8, 0, residue_rhs({0, 4, 1, 0, 2, -2}, 2)},
      {"remark-mock-spt", 0, 0, residue_rhs({0, 0, -2, 3, 5, 1}, -1)},
  };
  return t;
}

/// Crank moments: c_k T^C_{k,m} == u_m J11^2 prefix_m (mod 11) for k = 2, 4, 6, 8.
struct CrankMomentRow {
  int m;
  std::array<long, 4> multiplier;
  long unit;
};

inline const std::vector<CrankMomentRow>& crank_moment_rows() {
  static const std::vector<CrankMomentRow> t{
      {0, {1, 1, 1, 1}, 0},  {1, {1, 1, 1, 1}, 2},   {2, {7, 10, 8, 2}, 1}, {3, {8, 7, 2, 10}, 1},
      {4, {8, 9, 3, 6}, 1},  {5, {3, 2, 8, 5}, 1},   {7, {1, 7, 10, 5}, 1}, {8, {7, 9, 9, 7}, 1},
      {9, {1, 9, 4, 3}, 1},  {10, {3, 4, 9, 1}, 1},
  };
  return t;
}

/// Moment reductions: X_k(n) == sum_{i=1}^{5} w_i count(i,11,n) (mod 11), k = 2, 4, 6, 8.
inline constexpr std::array<std::array<long, 5>, 4> kMomentReduction{{
    {2, -3, -4, -1, 6},
    {2, -1, -3, 6, -4},
    {2, -4, 6, -3, -1},
    {2, 6, -1, -4, -3},
}};

// ---------------------------------------------------------------------------
// Structural identities (each list of monomials sums to zero)

struct ProductRelation {
  std::string id;
  std::vector<std::pair<long, std::string>> terms;
};

inline const std::vector<ProductRelation>& weierstrass_relations() {
  static const std::vector<ProductRelation> t{
      {"wr1", {{1, "P2 P4 P5^2"}, {-1, "P3^2 P4 P5"}, {1, "q^2 P1^2 P2 P3"}}},
      {"wr2", {{1, "P1 P4 P5^2"}, {-1, "P2 P3 P4^2"}, {1, "q P1 P2 P3^2"}}},
      {"wr3", {{1, "P1 P3 P5^2"}, {-1, "P2^2 P4 P5"}, {1, "q P1^2 P3 P4"}}},
      {"wr4", {{1, "P1 P4^2 P5"}, {-1, "P2 P3^2 P5"}, {1, "q P1 P2^2 P4"}}},
      {"wr5", {{1, "P1 P3 P4^2"}, {-1, "P2^2 P3 P5"}, {1, "q P1^2 P2 P5"}}},
      {"wr6", {{1, "P3 P5^3"}, {-1, "P5 P4^3"}, {1, "q^3 P2 P1^3"}}},
      {"wr7", {{1, "P2 P5^3"}, {-1, "P3 P4^3"}, {1, "q^2 P1 P2^3"}}},
      {"wr8", {{1, "P2 P4^3"}, {-1, "P5 P3^3"}, {1, "q^2 P4 P1^3"}}},
      {"wr9", {{1, "P1 P5^3"}, {-1, "P4 P3^3"}, {1, "q P3 P2^3"}}},
      {"wr10", {{1, "P1 P3^3"}, {-1, "P4 P2^3"}, {1, "q P5 P1^3"}}},
  };
  return t;
}

/// J1^3 = P5^2 P4 - q^2 P1^2 P3 - q P4^2 P1 - q P2^2 P5 - q P3^2 P2.
inline const ProductRelation& cube_decomposition() {
  static const ProductRelation r{"obrien",
                                 {{1, "J1^3"}, {-1, "P5^2 P4"}, {1, "q^2 P1^2 P3"}, {1, "q P4^2 P1"}, {1, "q P2^2 P5"}, {1, "q P3^2 P2"}}};
  return r;
}

inline const ProductRelation& product_of_blocks() {
  static const ProductRelation r{"pprod", {{1, "P1 P2 P3 P4 P5"}, {-1, "J1 J11^4"}}};
  return r;
}

// ---------------------------------------------------------------------------
// Positivity: closed forms of differences and the blocks they are built from

/// A combination (plain bracket, residue bracket or Theta) equal to one monomial.
struct ClosedForm {
  std::string id;
  enum class Kind { Bracket, Residue, Theta } kind;
  int m;  // residue for Kind::Residue
  ResidueCoeffs c;
  std::string product;
};

inline const std::vector<ClosedForm>& closed_forms() {
  using K = ClosedForm::Kind;
  static const std::vector<ClosedForm> t{
      {"prop-6.6-1", K::Bracket, 0, {0, -1, 1, 0, 0, 0}, "q^3 J11^2 P1^2 P2^2 P3 / J1^3 P4 P5"},
      {"prop-6.6-2", K::Bracket, 0, {0, 0, -1, 1, 0, 0}, "q^2 J11^2 P1^2 P2 P5 / J1^3 P3"},
      {"prop-6.6-3", K::Bracket, 0, {0, 0, 0, -1, 1, 0}, "q J11^2 P1^2 P4 P5^2 / J1^3 P2 P3"},
      {"prop-6.9-1", K::Theta, 6, {0, 0, 0, 1, -1, 0}, "q^3 J11^2 P1^3 / J1^3 P5"},
      {"prop-6.9-2", K::Theta, 6, {0, 0, 1, -1, 0, 0}, "q^2 J11^2 P1^2 P5 / J1^3 P4"},
      {"prop-6.9-3", K::Theta, 6, {0, 1, -1, 0, 0, 0}, "J11^2 P5^3 / J1^3 P3"},
      {"lemma-6.10-1", K::Residue, 1, {0, 0, 0, 0, -1, 1}, "q^2 J11^2 P1 P3 P4 / J1^3 P5"},
      {"lemma-6.10-2", K::Residue, 2, {0, 1, 0, 0, 0, -1}, "q^2 J11^2 P1^2 P4 / J1^3 P2"},
      {"lemma-6.10-3", K::Residue, 3, {0, 0, 0, 1, 0, -1}, "q^2 J11^2 P1^2 P5^2 / J1^3 P3 P4"},
      {"lemma-6.10-4", K::Residue, 3, {0, 0, -1, 0, 0, 1}, "q^3 J11^2 P1^3 / J1^3 P3"},
      {"lemma-6.10-5", K::Residue, 5, {0, 0, 1, 0, 0, -1}, "q^3 J11^2 P1^2 P2^2 / J1^3 P3 P5"},
      {"lemma-6.10-6", K::Residue, 8, {0, 0, 0, -1, 0, 1}, "J11^2 P5^3 / J1^3 P4"},
  };
  return t;
}

/// J11^2 q P1 / (P4 P5) = q - q^2 + q^5 + ...: the one crank block with a negative coefficient.
inline constexpr std::string_view kExceptionBlock = "q J11^2 P1 / P4 P5";
inline constexpr std::array<long, 6> kExceptionPrefix{0, 1, -1, 0, 0, 1};

// ---------------------------------------------------------------------------
// Inequality chains among counts

/// A chain "A >= B >=k C ..." where the subscript k means "for n >= k".
struct Chain {
  std::string id;
  int m;
  std::string text;
};

struct ChainLink {
  LinearForm left;
  LinearForm right;
  long from = 0;
  std::string text;
};

inline std::vector<ChainLink> parse_chain(std::string_view text) {
  std::vector<ChainLink> links;
  std::vector<std::pair<std::string, long>> items;  // term, subscript of the following '>='
  std::vector<std::string> terms;
  std::vector<long> subs;
  std::size_t i = 0;
  std::string cur;
  while (i < text.size()) {
    if (text.substr(i, 2) == ">=") {
      i += 2;
      long k = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') k = k * 10 + (text[i++] - '0');
      terms.push_back(std::string(detail::trim(cur)));
      subs.push_back(k);
      cur.clear();
      continue;
    }
    cur += text[i++];
  }
  terms.push_back(std::string(detail::trim(cur)));
  for (std::size_t j = 0; j + 1 < terms.size(); ++j)
    links.push_back({parse_linear(terms[j]), parse_linear(terms[j + 1]), subs[j], terms[j] + " >= " + terms[j + 1]});
  return links;
}

/// Crank inequalities that hold for every n.
inline const std::vector<Chain>& crank_inequality_chains() {
  static const std::vector<Chain> t{
      {"thm-6.1-m0", 0, "M0 >= P >= M1"},       {"thm-6.1-m1", 1, "M1 >= P >= M2 >= M0"},
      {"thm-6.1-m2", 2, "M2 >= P >= M0"},       {"thm-6.1-m3", 3, "M0 >= P >= M1"},
      {"thm-6.1-m4", 4, "M0 >= P >= M1"},       {"thm-6.1-m5", 5, "M0 >= P >= M2"},
      {"thm-6.1-m7", 7, "M1 >= P >= M0"},       {"thm-6.1-m9", 9, "M1 >= P >= M0"},
      {"thm-6.1-m10", 10, "M0 >= P >= M3"},
  };
  return t;
}

/// Conjectured residue-8 crank chain, claimed for n != 2.
inline const Chain& crank_chain_residue8() {
  static const Chain c{"conj-6.2", 8, "M1 >= P >= M0"};
  return c;
}

/// Conjectured rank-crank chains with their printed thresholds.
inline const std::vector<Chain>& rank_crank_chains() {
  static const std::vector<Chain> t{
      {"conj-6.5-m0", 0, "N0 >=3 N1 >= N2 >=1 M0 >= P >= M1 >= N3 >=2 N4 >= N5"},
      {"conj-6.5-m1", 1, "N0 >= N1 >= N2 >=1 M1 >= P >= M2 >= M0 >=1 N3 >= N4 >= N5"},
      {"conj-6.5-m2", 2, "N0 >=3 N1 >= N2 >=1 M2 >= P >= M0 >= N3 >= N4 >= N5"},
      {"conj-6.5-m3", 3, "N0 >=2 N1 >=1 N2 >= M0 >= P >= M1 >= N3 >= N4 >= N5"},
      {"conj-6.5-m4", 4, "N0 >=3 N1 >= N2 >=1 M0 >= P >= M1 >=1 N3 >= N4 >= N5"},
      {"conj-6.5-m5", 5, "N0 >= N1 >= N2 >= M0 >= P >= M2 >= N3 >=1 N4 >= N5"},
      {"conj-6.5-m6", 6, "N0 >=1 N1 >= N2 >= P >= N3 >= N4 >=1 N5"},
      {"conj-6.5-m7", 7, "N0 >= N1 >=1 N2 >= M1 >= P >= M0 >= N3 >= N4 >= N5"},
      {"conj-6.5-m8", 8, "N0 >=3 N1 >= N2 >= M1 >=3 P >=3 M0 >= N3 >= N4 >= N5"},
      {"conj-6.5-m9", 9, "N0 >=2 N1 >= N2 >= M1 >= P >= M0 >=1 N3 >= N4 >= N5"},
      {"conj-6.5-m10", 10, "N0 >=3 N1 >= N2 >= M0 >= P >= M3 >=1 N3 >= N4 >= N5"},
  };
  return t;
}

}  // namespace qdissect

// Generated by tools/gen_topologies.py -- do not edit by hand.
#include "qpb/bundled.hpp"

namespace qpb {

const char* const kEagleTopologyJson = R"qpbjson({
  "schema_version": 1,
  "name": "eagle",
  "qubit_count": 127,
  "edges": [[0,1],[1,2],[1,14],[2,3],[3,4],[4,5],[5,6],[5,15],[6,7],[7,8],[8,9],[9,10],[9,16],[10,11],[11,12],[12,13],[13,17],[14,20],[15,24],[16,28],[17,32],[18,19],[18,33],[19,20],[20,21],[21,22],[22,23],[22,34],[23,24],[24,25],[25,26],[26,27],[26,35],[27,28],[28,29],[29,30],[30,31],[30,36],[31,32],[33,37],[34,41],[35,45],[36,49],[37,38],[38,39],[39,40],[39,52],[40,41],[41,42],[42,43],[43,44],[43,53],[44,45],[45,46],[46,47],[47,48],[47,54],[48,49],[49,50],[50,51],[51,55],[52,58],[53,62],[54,66],[55,70],[56,57],[56,71],[57,58],[58,59],[59,60],[60,61],[60,72],[61,62],[62,63],[63,64],[64,65],[64,73],[65,66],[66,67],[67,68],[68,69],[68,74],[69,70],[71,75],[72,79],[73,83],[74,87],[75,76],[76,77],[77,78],[77,90],[78,79],[79,80],[80,81],[81,82],[81,91],[82,83],[83,84],[84,85],[85,86],[85,92],[86,87],[87,88],[88,89],[89,93],[90,96],[91,100],[92,104],[93,108],[94,95],[94,109],[95,96],[96,97],[97,98],[98,99],[98,110],[99,100],[100,101],[101,102],[102,103],[102,111],[103,104],[104,105],[105,106],[106,107],[106,112],[107,108],[109,113],[110,117],[111,121],[112,125],[113,114],[114,115],[115,116],[116,117],[117,118],[118,119],[119,120],[120,121],[121,122],[122,123],[123,124],[124,125],[125,126]],
  "rectangles": [
    {"index": 1, "cycle": [1, 2, 3, 4, 5, 15, 24, 23, 22, 21, 20, 14], "corners": [1, 5, 24, 20]},
    {"index": 2, "cycle": [5, 6, 7, 8, 9, 16, 28, 27, 26, 25, 24, 15], "corners": [5, 9, 28, 24]},
    {"index": 3, "cycle": [9, 10, 11, 12, 13, 17, 32, 31, 30, 29, 28, 16], "corners": [9, 13, 32, 28]},
    {"index": 4, "cycle": [18, 19, 20, 21, 22, 34, 41, 40, 39, 38, 37, 33], "corners": [18, 22, 41, 37]},
    {"index": 5, "cycle": [22, 23, 24, 25, 26, 35, 45, 44, 43, 42, 41, 34], "corners": [22, 26, 45, 41]},
    {"index": 6, "cycle": [26, 27, 28, 29, 30, 36, 49, 48, 47, 46, 45, 35], "corners": [26, 30, 49, 45]},
    {"index": 7, "cycle": [39, 40, 41, 42, 43, 53, 62, 61, 60, 59, 58, 52], "corners": [39, 43, 62, 58]},
    {"index": 8, "cycle": [43, 44, 45, 46, 47, 54, 66, 65, 64, 63, 62, 53], "corners": [43, 47, 66, 62]},
    {"index": 9, "cycle": [47, 48, 49, 50, 51, 55, 70, 69, 68, 67, 66, 54], "corners": [47, 51, 70, 66]},
    {"index": 10, "cycle": [56, 57, 58, 59, 60, 72, 79, 78, 77, 76, 75, 71], "corners": [56, 60, 79, 75]},
    {"index": 11, "cycle": [60, 61, 62, 63, 64, 73, 83, 82, 81, 80, 79, 72], "corners": [60, 64, 83, 79]},
    {"index": 12, "cycle": [64, 65, 66, 67, 68, 74, 87, 86, 85, 84, 83, 73], "corners": [64, 68, 87, 83]},
    {"index": 13, "cycle": [77, 78, 79, 80, 81, 91, 100, 99, 98, 97, 96, 90], "corners": [77, 81, 100, 96]},
    {"index": 14, "cycle": [81, 82, 83, 84, 85, 92, 104, 103, 102, 101, 100, 91], "corners": [81, 85, 104, 100]},
    {"index": 15, "cycle": [85, 86, 87, 88, 89, 93, 108, 107, 106, 105, 104, 92], "corners": [85, 89, 108, 104]},
    {"index": 16, "cycle": [94, 95, 96, 97, 98, 110, 117, 116, 115, 114, 113, 109], "corners": [94, 98, 117, 113]},
    {"index": 17, "cycle": [98, 99, 100, 101, 102, 111, 121, 120, 119, 118, 117, 110], "corners": [98, 102, 121, 117]},
    {"index": 18, "cycle": [102, 103, 104, 105, 106, 112, 125, 124, 123, 122, 121, 111], "corners": [102, 106, 125, 121]}
  ],
  "adjacency": [[1,2],[1,4],[1,5],[2,3],[2,5],[2,6],[3,6],[4,5],[4,7],[5,6],[5,7],[5,8],[6,8],[6,9],[7,8],[7,10],[7,11],[8,9],[8,11],[8,12],[9,12],[10,11],[10,13],[11,12],[11,13],[11,14],[12,14],[12,15],[13,14],[13,16],[13,17],[14,15],[14,17],[14,18],[15,18],[16,17],[17,18]]
}
)qpbjson";

const char* const kHeronTopologyJson = R"qpbjson({
  "schema_version": 1,
  "name": "heron",
  "qubit_count": 156,
  "edges": [[0,1],[1,2],[2,3],[3,4],[3,16],[4,5],[5,6],[6,7],[7,8],[7,17],[8,9],[9,10],[10,11],[11,12],[11,18],[12,13],[13,14],[14,15],[15,19],[16,23],[17,27],[18,31],[19,35],[20,21],[21,22],[21,36],[22,23],[23,24],[24,25],[25,26],[25,37],[26,27],[27,28],[28,29],[29,30],[29,38],[30,31],[31,32],[32,33],[33,34],[33,39],[34,35],[36,41],[37,45],[38,49],[39,53],[40,41],[41,42],[42,43],[43,44],[43,56],[44,45],[45,46],[46,47],[47,48],[47,57],[48,49],[49,50],[50,51],[51,52],[51,58],[52,53],[53,54],[54,55],[55,59],[56,63],[57,67],[58,71],[59,75],[60,61],[61,62],[61,76],[62,63],[63,64],[64,65],[65,66],[65,77],[66,67],[67,68],[68,69],[69,70],[69,78],[70,71],[71,72],[72,73],[73,74],[73,79],[74,75],[76,81],[77,85],[78,89],[79,93],[80,81],[81,82],[82,83],[83,84],[83,96],[84,85],[85,86],[86,87],[87,88],[87,97],[88,89],[89,90],[90,91],[91,92],[91,98],[92,93],[93,94],[94,95],[95,99],[96,103],[97,107],[98,111],[99,115],[100,101],[101,102],[101,116],[102,103],[103,104],[104,105],[105,106],[105,117],[106,107],[107,108],[108,109],[109,110],[109,118],[110,111],[111,112],[112,113],[113,114],[113,119],[114,115],[116,121],[117,125],[118,129],[119,133],[120,121],[121,122],[122,123],[123,124],[123,136],[124,125],[125,126],[126,127],[127,128],[127,137],[128,129],[129,130],[130,131],[131,132],[131,138],[132,133],[133,134],[134,135],[135,139],[136,143],[137,147],[138,151],[139,155],[140,141],[141,142],[142,143],[143,144],[144,145],[145,146],[146,147],[147,148],[148,149],[149,150],[150,151],[151,152],[152,153],[153,154],[154,155]],
  "rectangles": [
    {"index": 1, "cycle": [3, 4, 5, 6, 7, 17, 27, 26, 25, 24, 23, 16], "corners": [3, 7, 27, 23]},
    {"index": 2, "cycle": [7, 8, 9, 10, 11, 18, 31, 30, 29, 28, 27, 17], "corners": [7, 11, 31, 27]},
    {"index": 3, "cycle": [11, 12, 13, 14, 15, 19, 35, 34, 33, 32, 31, 18], "corners": [11, 15, 35, 31]},
    {"index": 4, "cycle": [21, 22, 23, 24, 25, 37, 45, 44, 43, 42, 41, 36], "corners": [21, 25, 45, 41]},
    {"index": 5, "cycle": [25, 26, 27, 28, 29, 38, 49, 48, 47, 46, 45, 37], "corners": [25, 29, 49, 45]},
    {"index": 6, "cycle": [29, 30, 31, 32, 33, 39, 53, 52, 51, 50, 49, 38], "corners": [29, 33, 53, 49]},
    {"index": 7, "cycle": [43, 44, 45, 46, 47, 57, 67, 66, 65, 64, 63, 56], "corners": [43, 47, 67, 63]},
    {"index": 8, "cycle": [47, 48, 49, 50, 51, 58, 71, 70, 69, 68, 67, 57], "corners": [47, 51, 71, 67]},
    {"index": 9, "cycle": [51, 52, 53, 54, 55, 59, 75, 74, 73, 72, 71, 58], "corners": [51, 55, 75, 71]},
    {"index": 10, "cycle": [61, 62, 63, 64, 65, 77, 85, 84, 83, 82, 81, 76], "corners": [61, 65, 85, 81]},
    {"index": 11, "cycle": [65, 66, 67, 68, 69, 78, 89, 88, 87, 86, 85, 77], "corners": [65, 69, 89, 85]},
    {"index": 12, "cycle": [69, 70, 71, 72, 73, 79, 93, 92, 91, 90, 89, 78], "corners": [69, 73, 93, 89]},
    {"index": 13, "cycle": [83, 84, 85, 86, 87, 97, 107, 106, 105, 104, 103, 96], "corners": [83, 87, 107, 103]},
    {"index": 14, "cycle": [87, 88, 89, 90, 91, 98, 111, 110, 109, 108, 107, 97], "corners": [87, 91, 111, 107]},
    {"index": 15, "cycle": [91, 92, 93, 94, 95, 99, 115, 114, 113, 112, 111, 98], "corners": [91, 95, 115, 111]},
    {"index": 16, "cycle": [101, 102, 103, 104, 105, 117, 125, 124, 123, 122, 121, 116], "corners": [101, 105, 125, 121]},
    {"index": 17, "cycle": [105, 106, 107, 108, 109, 118, 129, 128, 127, 126, 125, 117], "corners": [105, 109, 129, 125]},
    {"index": 18, "cycle": [109, 110, 111, 112, 113, 119, 133, 132, 131, 130, 129, 118], "corners": [109, 113, 133, 129]},
    {"index": 19, "cycle": [123, 124, 125, 126, 127, 137, 147, 146, 145, 144, 143, 136], "corners": [123, 127, 147, 143]},
    {"index": 20, "cycle": [127, 128, 129, 130, 131, 138, 151, 150, 149, 148, 147, 137], "corners": [127, 131, 151, 147]},
    {"index": 21, "cycle": [131, 132, 133, 134, 135, 139, 155, 154, 153, 152, 151, 138], "corners": [131, 135, 155, 151]}
  ],
  "adjacency": [[1,2],[1,4],[1,5],[2,3],[2,5],[2,6],[3,6],[4,5],[4,7],[5,6],[5,7],[5,8],[6,8],[6,9],[7,8],[7,10],[7,11],[8,9],[8,11],[8,12],[9,12],[10,11],[10,13],[11,12],[11,13],[11,14],[12,14],[12,15],[13,14],[13,16],[13,17],[14,15],[14,17],[14,18],[15,18],[16,17],[16,19],[17,18],[17,19],[17,20],[18,20],[18,21],[19,20],[20,21]]
}
)qpbjson";

}  // namespace qpb

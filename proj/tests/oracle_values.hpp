#pragma once

// Generated by tools/gen_oracles.py (mpmath, 40 digits). Do not edit.

namespace oracle {

struct RealBesselRow { double nu, x, k_scaled, i_scaled; };
struct ComplexBesselRow { double nu, re, im, k_re, k_im; };
struct ZeroRow { double mu, re, im; };
struct HRow { double mu, x, u, h; };
struct W2Row { double mu, x, v, w2; };
struct DensityRow { double mu, x, t, q; };

inline constexpr RealBesselRow kRealBessel[] = {
    {0, 1e-8, 18.536612444976901932, 0.999999990000000075},
    {0, 0.01, 4.7686940285444619046, 0.99007458514970749901},
    {0, 0.5, 1.52410938577390953, 0.64503527044915006811},
    {0, 1, 1.1444630798068950147, 0.4657596075936404365},
    {0, 2, 0.84156821507077141792, 0.30850832255367103953},
    {0, 5, 0.54780756431351898687, 0.18354081260932835307},
    {0, 20, 0.27854487665718222393, 0.089780311884826021596},
    {0, 100, 0.12517562165912657889, 0.039944379299096682648},
    {0.3, 1e-8, 462.56360781470249312, 0.0036030535747396746388},
    {0.3, 0.01, 6.9593493210346792607, 0.22507959815363295104},
    {0.3, 0.5, 1.6099336591565363652, 0.46760586418093304082},
    {0.3, 1, 1.1826592506049941964, 0.40054527739459047075},
    {0.3, 2, 0.85740371300843001855, 0.29471125410306295677},
    {0.3, 5, 0.55234470223327118831, 0.18166915887022482583},
    {0.3, 20, 0.27915738330805848836, 0.089573201399196320645},
    {0.3, 100, 0.12523168455640366855, 0.039926317562480277614},
    {0.5, 1e-8, 12533.141373155002512, 0.000079788455282401980104},
    {0.5, 0.01, 12.533141373155002512, 0.078995864259767999312},
    {0.5, 0.5, 1.7724538509055160273, 0.35663583483745893528},
    {0.5, 1, 1.2533141373155002512, 0.34495131388824462599},
    {0.5, 2, 0.88622692545275801365, 0.27692804543535513001},
    {0.5, 5, 0.56049912163979286993, 0.17840431170432102234},
    {0.5, 20, 0.28024956081989643497, 0.089206205807638555348},
    {0.5, 100, 0.12533141373155002512, 0.039894228040143267794},
    {1, 1e-8, 100000000.99999990982, 4.9999999500000003125e-9},
    {1, 0.01, 100.97864845824005116, 0.0049503110471182756055},
    {1, 0.5, 2.7310097082117857054, 0.15642080318487169714},
    {1, 1, 1.6361534862632582465, 0.20791041534970844887},
    {1, 2, 1.0334768470686885732, 0.21526928924893765916},
    {1, 5, 0.60027385878831258294, 0.16397226694454235693},
    {1, 20, 0.28542549694072644517, 0.087506222183288665356},
    {1, 100, 0.12579995047957852933, 0.039744153025130252674},
    {1.5, 1e-8, 1253314149848.6416244, 2.6596151760800659857e-13},
    {1.5, 0.01, 1265.8472786886552537, 0.00026331779208562831488},
    {1.5, 0.5, 5.3173615527165480819, 0.058471662583135768062},
    {1.5, 1, 2.5066282746310005024, 0.1079819330263761039},
    {1.5, 2, 1.3293403881791370205, 0.14879751539472359193},
    {1.5, 5, 0.67259894596775144392, 0.1427396491853689961},
    {1.5, 20, 0.29426203886089125671, 0.084745895517256628339},
    {1.5, 100, 0.12658472786886552537, 0.039495285759741835116},
    {2.2, 1e-8, 1007719700688006024.4, 2.2553169012926918891e-19},
    {2.2, 0.01, 64220.494020312799674, 3.5388978501258707376e-6},
    {2.2, 0.5, 18.249399483844103335, 0.012085288909598906731},
    {2.2, 1, 5.7350629525732208459, 0.035688883377196053314},
    {2.2, 2, 2.2044938140882992942, 0.075495497596648966531},
    {2.2, 5, 0.84974461937517376922, 0.10776654894177197387},
    {2.2, 20, 0.3134376274454559553, 0.079305287471413440947},
    {2.2, 100, 0.12822635071335953302, 0.038984597901430153954},
    {2.5, 1e-8, 3.7599424495459249984e+20, 5.3192303521601319563e-22},
    {2.5, 0.01, 379766.71674796973112, 5.2663407950484640146e-7},
    {2.5, 0.5, 33.676623167204804519, 0.005805859338644326904},
    {2.5, 1, 8.7731989612085017585, 0.021005514809116314286},
    {2.5, 2, 2.8802375077214635444, 0.05373177234326974211},
    {2.5, 5, 0.96405848922044373628, 0.092760522193099624674},
    {2.5, 20, 0.32438886664903012347, 0.076494321480050061097},
    {2.5, 100, 0.12912895556761599088, 0.038709369467351012741},
    {3, 1e-8, 8.0000000800000003e+24, 2.0833333125000001172e-26},
    {3, 0.01, 8080300.3329190801176, 2.06261671161687195e-8},
    {3, 0.5, 102.31619545718020452, 0.0016043415075654608433},
    {3, 1, 19.303233695596904277, 0.0081553077728142938166},
    {3, 2, 4.7835669713476085554, 0.028791222639470898409},
    {3, 5, 1.230607545051387799, 0.069610742279333228684},
    {3, 20, 0.34684298221097741886, 0.071300284249989234344},
    {3, 100, 0.1309076153063272553, 0.03817817317558648957},
    {5.7, 1e-8, 7.5048928698329904336e+48, 1.1688281200950186211e-50},
    {5.7, 0.01, 478283201459395.15678, 1.8340422305680789456e-16},
    {5.7, 0.5, 159440.19885689788423, 5.4800086445882475122e-7},
    {5.7, 1, 4860.7144603420843287, 0.000017767329266494138933},
    {5.7, 2, 217.8121083626598138, 0.00037952332688785332263},
    {5.7, 5, 9.0047285302277385639, 0.0073107625941240174715},
    {5.7, 20, 0.61269186963585202991, 0.039247520770216488178},
    {5.7, 100, 0.14713072453667783211, 0.033928727367436020888},
    {10, 1e-8, 1.8579456185794560877e+88, 2.69114442855592772e-90},
    {10, 0.01, 1.8766130508929295923e+28, 2.6643731761165947052e-30},
    {10, 0.5, 311505389372.09950263, 1.6030859629529216506e-13},
    {10, 1, 491229652.09901985988, 1.0127529864692066036e-10},
    {10, 2, 1200591.5980940752814, 4.0830166112655466968e-8},
    {10, 5, 1448.2991377792564036, 0.000030860096549865415747},
    {10, 20, 3.0644074558832955753, 0.0072968964849783254963},
    {10, 100, 0.20578687173955779807, 0.024176682718258828365},
};

inline constexpr ComplexBesselRow kComplexBessel[] = {
    {0, 0.5, 0.5, 0.55297231092557471449, -0.59964194785659462702},
    {0, 1.5, -2.0, -0.13008489722328320482, 0.11184203197635645441},
    {0, -0.7, 0.9, -0.80066987077254089506, -2.2932162730532307913},
    {0, -2.5, 1.5, -8.6518594584991104308, -3.3813929056639566458},
    {0, -4.0, 3.0, -14.456348971093792599, 27.682490710240719407},
    {0, 3.0, 6.0, 0.023105664502669083367, -0.0060189841029759697658},
    {0, -1.2, -0.4, -0.61265775618624528271, 4.0192516827678581959},
    {0, 0.1, 0.05, 2.3143029547026733545, -0.45624034510864131685},
    {0.3, 0.5, 0.5, 0.5585317007171729857, -0.63604435137412953744},
    {0.3, 1.5, -2.0, -0.13282299172164052273, 0.11154200472340786221},
    {0.3, -0.7, 0.9, -0.88079855004696721976, -2.2380885621146327238},
    {0.3, -2.5, 1.5, -8.5718495680976836432, -3.2381302446692839701},
    {0.3, -4.0, 3.0, -14.173429019358710397, 27.573135354423560354},
    {0.3, 3.0, 6.0, 0.023146227583483052666, -0.0061681646495071441308},
    {0.3, -1.2, -0.4, -0.71452924565635829055, 3.8666051467921169196},
    {0.3, 0.1, 0.05, 2.6272941624684950119, -0.60958088351990792707},
    {1, 0.5, 0.5, 0.5784533638220991963, -1.0828582158182142025},
    {1, 1.5, -2.0, -0.1619805340765865247, 0.10663386386354863275},
    {1, -0.7, 0.9, -1.5508524890455961048, -1.5383285698056489832},
    {1, -2.5, 1.5, -7.7172372234270007834, -1.9491416837291260551},
    {1, -4.0, 3.0, -11.469110821647229272, 26.401493375319126477},
    {1, 3.0, 6.0, 0.023517995057642354927, -0.007716415764359989475},
    {1, -1.2, -0.4, -1.3224608010000884372, 2.3507646661574431735},
    {1, 0.1, 0.05, 7.8479662536084841537, -4.0472898177488787733},
    {2, 0.5, 0.5, -0.45583739306665529799, -3.9222651071372214247},
    {2, 1.5, -2.0, -0.27608122645271586164, 0.059358744821844422324},
    {2, -0.7, 0.9, -1.2605144407620284638, 1.5107794792621396564},
    {2, -2.5, 1.5, -4.8002405095640956364, 0.48889181068035307484},
    {2, -4.0, 3.0, -4.4498750980900888773, 21.98659942733393396},
    {2, 3.0, 6.0, 0.024183686306525400164, -0.013319304886928596343},
    {2, -1.2, -0.4, 0.19565111223516569251, -0.16812571696835092153},
    {2, 0.1, 0.05, 95.503444470447384455, -127.99660745795856784},
    {2.2, 0.5, 0.5, -1.3667006509391476933, -5.2047732143223446017},
    {2.2, 1.5, -2.0, -0.31230961193443333208, 0.035034527870607053566},
    {2.2, -0.7, 0.9, -0.41978472658604720262, 2.1187836668045854267},
    {2.2, -2.5, 1.5, -4.0787405741131143155, 0.77455250704825521567},
    {2.2, -4.0, 3.0, -2.9600390579934006775, 20.683065441358363319},
    {2.2, 3.0, 6.0, 0.024194158057484417925, -0.015018619996882378337},
    {2.2, -1.2, -0.4, 0.79190227706856079145, 0.097165631401843296721},
    {2.2, 0.1, 0.05, 163.44750168172977218, -267.36961420157744223},
    {3, 0.5, 0.5, -16.933956636993407694, -14.948569072100478709},
    {3, 1.5, -2.0, -0.50299770484315461244, -0.18976571096695702471},
    {3, -0.7, 0.9, 5.3477987105523904528, -1.3016597661061783546},
    {3, -2.5, 1.5, -1.7247953458125213936, 0.86409654575099665906},
    {3, -4.0, 3.0, 1.9323769662507159106, 14.466009788908651403},
    {3, 3.0, 6.0, 0.022863348799687210254, -0.024166196431021161921},
    {3, -1.2, -0.4, -1.7412884207372345854, 3.0507929292976616616},
    {3, 0.1, 0.05, 1016.0124699805876453, -5627.9938399995808887},
    {5.7, 0.5, 0.5, -2820.1325235756172786, 13294.77850851262308},
    {5.7, 1.5, -2.0, 8.6072460769632718116, -6.8538584136664871065},
    {5.7, -0.7, 0.9, 903.79399382101619549, -79.559870897742889454},
    {5.7, -2.5, 1.5, -1.0254424509299728937, -3.1462779902229328923},
    {5.7, -4.0, 3.0, 1.9786986942396610005, 0.2854236497584201356},
    {5.7, 3.0, 6.0, -0.053176518657224998169, -0.067238981888266599325},
    {5.7, -1.2, -0.4, -438.78244886676645171, -142.96532213660299781},
    {5.7, 0.1, 0.05, -439213240.08026178599, -238957279.6629917644},
};

inline constexpr ZeroRow kZeros[] = {
    {1.5, -1.0, 0.0},
    {2, -1.2813737976560964761, 0.42948496520871969998},
    {2, -1.2813737976560964761, -0.42948496520871969998},
    {2.5, -1.5, 0.86602540378443864676},
    {2.5, -1.5, -0.86602540378443864676},
    {3, -1.6817888047458454585, 1.3080120322739490523},
    {3, -1.6817888047458454585, -1.3080120322739490523},
    {3.5, -2.3221853546260855929, 0.0},
    {3.5, -1.8389073226869572035, 1.754380959783721661},
    {3.5, -1.8389073226869572035, -1.754380959783721661},
    {4.2, -2.7396665572034512039, 0.60626704559145698231},
    {4.2, -2.7396665572034512039, -0.60626704559145698231},
    {4.2, -2.0298657090273910867, 2.3852506660428240323},
    {4.2, -2.0298657090273910867, -2.3852506660428240323},
    {7, -4.5126267774997091265, 1.3027788416202445279},
    {7, -4.5126267774997091265, -1.3027788416202445279},
    {7, -3.9081257398031834723, 3.0708717702488955794},
    {7, -3.9081257398031834723, -3.0708717702488955794},
    {7, -2.6031262658681675943, 4.955969606538523752},
    {7, -2.6031262658681675943, -4.955969606538523752},
};

inline constexpr HRow kH[] = {
    {0, 1.2, 1e-6, 0.00089393152419463345093},
    {0, 1.2, 0.001, 0.0030790458255054519141},
    {0, 1.2, 0.1, 0.011304652604423355527},
    {0, 1.2, 1, 0.0093933544550195890072},
    {0, 1.2, 5, 0.000010764217930278812284},
    {0, 1.2, 30, 2.5214793438165782542e-27},
    {0, 2, 1e-6, 0.0033985318620815761418},
    {0, 2, 0.001, 0.011696508144640724693},
    {0, 2, 0.1, 0.039737579520679212024},
    {0, 2, 1, 0.018754785294325383005},
    {0, 2, 5, 9.5618526509870598198e-6},
    {0, 2, 30, 1.9503682642527010826e-27},
    {0, 5, 1e-6, 0.0078911229385532970651},
    {0, 5, 0.001, 0.027077168120535592418},
    {0, 5, 0.1, 0.070146021805432670375},
    {0, 5, 1, 0.013125201575598066335},
    {0, 5, 5, 5.9989474212225619631e-6},
    {0, 5, 30, 1.2319619364614778009e-27},
    {0.3, 1.2, 1e-6, 0.000013509337511046790274},
    {0.3, 1.2, 0.001, 0.00084425273527992911967},
    {0.3, 1.2, 0.1, 0.01091185318091672948},
    {0.3, 1.2, 1, 0.010515518244954039578},
    {0.3, 1.2, 5, 0.000010991522308721964503},
    {0.3, 1.2, 30, 2.5297123521764106223e-27},
    {0.3, 2, 1e-6, 0.00005170469641083171919},
    {0.3, 2, 0.001, 0.0032286531996401798879},
    {0.3, 2, 0.1, 0.038614417856386145014},
    {0.3, 2, 1, 0.021127245041001395358},
    {0.3, 2, 5, 9.7933615127063752756e-6},
    {0.3, 2, 30, 1.9577377009166632904e-27},
    {0.3, 5, 1e-6, 0.00012387883032111503068},
    {0.3, 5, 0.001, 0.0077123731773964820852},
    {0.3, 5, 0.1, 0.070307970222409519078},
    {0.3, 5, 1, 0.015022193693516145736},
    {0.3, 5, 5, 6.1621343064443224385e-6},
    {0.3, 5, 30, 1.2371801163723761053e-27},
    {1, 1.2, 1e-6, 1.8333329666931731738e-13},
    {1, 1.2, 0.001, 1.8329805062731086668e-7},
    {1, 1.2, 0.1, 0.0018503862543980565006},
    {1, 1.2, 1, 0.042991441282797730524},
    {1, 1.2, 5, 0.000013557024587361795253},
    {1, 1.2, 30, 2.6144731553350923795e-27},
    {1, 2, 1e-6, 7.4999925001132074689e-13},
    {1, 2, 0.001, 7.4925613408613658847e-7},
    {1, 2, 0.1, 0.0069986940236721046104},
    {1, 2, 1, 0.091938091343577175997},
    {1, 2, 5, 0.000012452971259820736605},
    {1, 2, 30, 2.0338245702566479174e-27},
    {1, 5, 1e-6, 2.3999904000596234763e-12},
    {1, 5, 0.001, 2.390442924432626198e-6},
    {1, 5, 0.1, 0.016966779605392804663},
    {1, 5, 1, 0.076320192667692450561},
    {1, 5, 5, 8.0696482846523820758e-6},
    {1, 5, 30, 1.291193722303219789e-27},
    {2.2, 1.2, 1e-6, 1.1634347274276375301e-28},
    {2.2, 1.2, 0.001, 1.8435521813159871005e-15},
    {2.2, 1.2, 0.1, 1.1452122941502578297e-6},
    {2.2, 1.2, 1, 0.029116627237896942984},
    {2.2, 1.2, 5, 0.000032011540894174891062},
    {2.2, 1.2, 30, 3.0043575223135637972e-27},
    {2.2, 2, 1e-6, 6.1810093842248313721e-28},
    {2.2, 2, 0.001, 9.7864636541164091045e-15},
    {2.2, 2, 0.1, 5.624310656190537047e-6},
    {2.2, 2, 1, 0.079682204465491027812},
    {2.2, 2, 5, 0.000033357902237585515799},
    {2.2, 2, 30, 2.3886482040791182339e-27},
    {2.2, 5, 1e-6, 4.8667040085088437344e-27},
    {2.2, 5, 0.001, 7.6824622314867599671e-14},
    {2.2, 5, 0.1, 0.000033335300381790766799},
    {2.2, 5, 1, 0.11660865789704772912},
    {2.2, 5, 5, 0.000024450393045686320753},
    {2.2, 5, 30, 1.5462011959190080676e-27},
};

inline constexpr W2Row kW2[] = {
    {0.3, 2, 0.01, -0.025120092729268396493},
    {0.3, 2, 1, -0.0095515017524071598915},
    {0.3, 2, 10, -0.00029470129987890969278},
    {0.3, 5, 0.01, -0.0065178943977612320147},
    {0.3, 5, 1, -0.0028081495343388643344},
    {0.3, 5, 10, -0.00014624928375518822892},
    {1, 2, 0.01, 0.22133107526167039148},
    {1, 2, 1, 0.086095945501056481479},
    {1, 2, 10, 0.00069341806925732190688},
    {1, 5, 0.01, 0.12454989428673271171},
    {1, 5, 1, 0.052682317346828599836},
    {1, 5, 10, 0.00066972625044888300704},
    {2.2, 2, 0.01, -0.92164430036441346769},
    {2.2, 2, 1, -0.19682960417223242546},
    {2.2, 2, 10, -0.000035515589975984996737},
    {2.2, 5, 0.01, -1.9111843791043955334},
    {2.2, 5, 1, -0.44087009621037880134},
    {2.2, 5, 10, -0.00016260936978443735742},
};

inline constexpr DensityRow kDensity[] = {
    {0, 1.2, 0.05, 3.8036768751124894525},
    {0, 1.2, 0.5, 0.15043162512449430727},
    {0, 1.2, 2, 0.020548344196779702387},
    {0, 1.2, 20, 0.00084343407603447567473},
    {0, 2, 0.05, 0.12091949277204996044},
    {0, 2, 0.5, 0.35722772474462109982},
    {0, 2, 2, 0.069637309082044008873},
    {0, 2, 20, 0.0031718952410532775007},
    {0, 5, 0.05, 8.1663211509481684169e-34},
    {0, 5, 0.5, 0.00048950172557115924875},
    {0, 5, 2, 0.025895643680129038638},
    {0, 5, 20, 0.0061833575489061177579},
    {0.3, 1.2, 0.05, 4.0052723932379428268},
    {0.3, 1.2, 0.5, 0.15593292502969661442},
    {0.3, 1.2, 2, 0.0207405040341324546},
    {0.3, 1.2, 20, 0.00077524690984480255856},
    {0.3, 2, 0.05, 0.14855578825619710333},
    {0.3, 2, 0.5, 0.4330426245561359635},
    {0.3, 2, 2, 0.082328566062175919977},
    {0.3, 2, 20, 0.0034197027208538869967},
    {0.3, 5, 0.05, 1.3223069181166944734e-33},
    {0.3, 5, 0.5, 0.0007870277826143217933},
    {0.3, 5, 2, 0.040922165916593085282},
    {0.3, 5, 20, 0.00901155561881014579},
    {1, 1.2, 0.05, 4.4121861649459617303},
    {1, 1.2, 0.5, 0.14659146187513168759},
    {1, 1.2, 2, 0.01496630206847621586},
    {1, 1.2, 20, 0.00023480951851430582466},
    {1, 2, 0.05, 0.23623956854415946719},
    {1, 2, 0.5, 0.60183255005579821607},
    {1, 2, 2, 0.089224413867711085716},
    {1, 2, 20, 0.0015774606714621803885},
    {1, 5, 0.05, 4.0431209217458732726e-33},
    {1, 5, 0.5, 0.0022407508634004818056},
    {1, 5, 2, 0.098079823403549318224},
    {1, 5, 20, 0.010188226674284760739},
    {2.2, 1.2, 0.05, 4.8209864576528759933},
    {2.2, 1.2, 0.5, 0.082825628196034217871},
    {2.2, 1.2, 2, 0.0030179384486047196963},
    {2.2, 1.2, 20, 3.3864781367940920798e-6},
    {2.2, 2, 0.05, 0.49607342760301781836},
    {2.2, 2, 0.5, 0.72241664829312937604},
    {2.2, 2, 2, 0.040808015083478088604},
    {2.2, 2, 20, 0.000054147710352217187557},
    {2.2, 5, 0.05, 2.6856474410309436138e-32},
    {2.2, 5, 0.5, 0.011045112462493635548},
    {2.2, 5, 2, 0.24469278370987883814},
    {2.2, 5, 20, 0.0024854775116443439123},
};

} // namespace oracle

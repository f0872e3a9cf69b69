// Generated by tools/gen_filters.py. Do not edit by hand.
#include "wavelet/filter_tables.hpp"
namespace beat::wavelet::tables {
namespace {
constexpr double k_db1[] = {
    7.071067811865475244008444e-1,
    7.071067811865475244008444e-1};
constexpr double k_db2[] = {
    -1.294095225512603811744494e-1,
    2.241438680420133810259728e-1,
    8.365163037378079055752938e-1,
    4.829629131445341433748716e-1};
constexpr double k_db3[] = {
    3.522629188570953660274066e-2,
    -8.544127388202666169281917e-2,
    -1.350110200102545886963899e-1,
    4.598775021184915700951519e-1,
    8.068915093110925764944936e-1,
    3.326705529500826159985116e-1};
constexpr double k_db4[] = {
    -1.059740178506903210488321e-2,
    3.288301166688519973540751e-2,
    3.084138183556076362721936e-2,
    -1.870348117190930840795707e-1,
    -2.798376941685985421141375e-2,
    6.308807679298589078817163e-1,
    7.14846570552915647089922e-1,
    2.303778133088965008632912e-1};
constexpr double k_db5[] = {
    3.335725285473771277998183e-3,
    -1.258075199908199946850974e-2,
    -6.241490212798274274190519e-3,
    7.757149384004571352313049e-2,
    -3.224486958463837464847976e-2,
    -2.422948870663820318625714e-1,
    1.384281459013207315053971e-1,
    7.243085284377729277280712e-1,
    6.038292697971896705401193e-1,
    1.601023979741929144807237e-1};
constexpr double k_db6[] = {
    -1.077301085308479564852622e-3,
    4.777257510945510639635975e-3,
    5.538422011614961392519184e-4,
    -3.158203931748602956507908e-2,
    2.752286553030572862554084e-2,
    9.750160558732304910234355e-2,
    -1.297668675672619355622896e-1,
    -2.262646939654398200763145e-1,
    3.152503517091976290859897e-1,
    7.511339080210953506789345e-1,
    4.946238903984530856772042e-1,
    1.115407433501094636213239e-1};
constexpr double k_db7[] = {
    3.537137999745202484462958e-4,
    -1.801640704047490915268263e-3,
    4.295779729213665211321291e-4,
    1.255099855609984061298989e-2,
    -1.657454163066688065410767e-2,
    -3.802993693501441357959206e-2,
    8.061260915108307191292248e-2,
    7.130921926683026475087657e-2,
    -2.240361849938749826381404e-1,
    -1.439060039285649754050684e-1,
    4.697822874051931224715912e-1,
    7.291320908462351199169431e-1,
    3.965393194819173065390004e-1,
    7.785205408500917901996352e-2};
constexpr double k_db8[] = {
    -1.174767841247695337306282e-4,
    6.754494064505693663695476e-4,
    -3.917403733769470462980804e-4,
    -4.870352993451574310422182e-3,
    8.746094047405776716382743e-3,
    1.398102791739828164872293e-2,
    -4.408825393079475150676372e-2,
    -1.736930100180754616961615e-2,
    1.287474266204784588570293e-1,
    4.7248457391328277036059e-4,
    -2.840155429615469265162031e-1,
    -1.582910525634930566738055e-2,
    5.853546836542067127712655e-1,
    6.756307362972898068078008e-1,
    3.128715909142999706591624e-1,
    5.441584224310400995500941e-2};
constexpr double k_db9[] = {
    3.934732031627159948068988e-5,
    -2.519631889427101369749887e-4,
    2.303857635231959672052164e-4,
    1.847646883056226476619129e-3,
    -4.281503682463429834496795e-3,
    -4.723204757751397277925708e-3,
    2.236166212367909720537378e-2,
    2.509471148314519575871897e-4,
    -6.763282906132997367564227e-2,
    3.07256814793333792123174e-2,
    1.485407493381063801350727e-1,
    -9.684078322297646051350813e-2,
    -2.932737832791749088064032e-1,
    1.331973858250075761909549e-1,
    6.572880780513005380782126e-1,
    6.048231236901111119030769e-1,
    2.438346746125903537320416e-1,
    3.807794736387834658869766e-2};
constexpr double k_db10[] = {
    -1.326420289452124481243668e-5,
    9.358867032006959133405013e-5,
    -1.16466855129285450951481e-4,
    -6.85856694959711626561371e-4,
    1.992405295185056117158742e-3,
    1.395351747052901165789318e-3,
    -1.073317548333057504431811e-2,
    3.606553566956169655423291e-3,
    3.321267405934100173976365e-2,
    -2.945753682187581285828324e-2,
    -7.139414716639708714533609e-2,
    9.305736460357235116035229e-2,
    1.273693403357932600826772e-1,
    -1.959462743773770435042993e-1,
    -2.498464243273153794161019e-1,
    2.81172343660577460748727e-1,
    6.884590394536035657418718e-1,
    5.272011889317255864817448e-1,
    1.88176800077691489020893e-1,
    2.667005790055555358661745e-2};
constexpr double k_db11[] = {
    4.494274277236510095415648e-6,
    -3.463498418698499554128085e-5,
    5.443907469936847167357857e-5,
    2.491525235528234988712217e-4,
    -8.930232506662646133900825e-4,
    -3.085928588151431651754591e-4,
    4.92841765605904112317074e-3,
    -3.340858873014445606090809e-3,
    -1.536482090620159942619812e-2,
    2.084090436018106302294811e-2,
    3.133509021904607603094798e-2,
    -6.643878569502520527899216e-2,
    -4.647995511668418727161723e-2,
    1.498120124663784964066563e-1,
    6.604358819668319190061458e-2,
    -2.742308468179469612021009e-1,
    -1.622752450274903622405827e-1,
    4.119643689479074629259396e-1,
    6.856867749162005111209386e-1,
    4.49899764356045334768894e-1,
    1.440670211506245127951916e-1,
    1.869429776147108402543573e-2};
constexpr double k_db12[] = {
    -1.529071758068510902712239e-6,
    1.277695221937976658714046e-5,
    -2.424154575703078402978915e-5,
    -8.850410920820432420821646e-5,
    3.886530628209314435897289e-4,
    6.54512821250959556650043e-6,
    -2.179503618627760471598903e-3,
    2.248607240995237599950865e-3,
    6.711499008795509177767027e-3,
    -1.284082519830068329466034e-2,
    -1.221864906974828071998798e-2,
    4.154627749508444073927095e-2,
    1.08491302558221843808901e-2,
    -9.643212009650708202650321e-2,
    5.359569674352150328276277e-3,
    1.824786059275796798540436e-1,
    -2.377925725606972768399755e-2,
    -3.161784537527855368648029e-1,
    -4.476388565377462666762747e-2,
    5.158864784278156087560326e-1,
    6.571987225793070893027611e-1,
    3.773551352142126570928213e-1,
    1.095662728211851546057045e-1,
    1.311225795722951750674609e-2};
constexpr double k_db13[] = {
    5.220035098454864691736424e-7,
    -4.700416479360868325650195e-6,
    1.044193057140813708170715e-5,
    3.067853757932549346649483e-5,
    -1.651289885565054894616688e-4,
    4.925152512628946192140957e-5,
    9.323261308672633862226518e-4,
    -1.315673911892298936613835e-3,
    -2.761911234656862178014576e-3,
    7.255589401617566194518393e-3,
    3.92394144879741624331637e-3,
    -2.383142071032364903206403e-2,
    2.379972254059078811465171e-3,
    5.613947710028342886214502e-2,
    -2.648840647534369463963912e-2,
    -1.058076181879343264509667e-1,
    7.294893365677716380902831e-2,
    1.79476079429339843234845e-1,
    -1.245767307508152589413808e-1,
    -3.149729077113886329981698e-1,
    8.69857261796472373102374e-2,
    5.888895704312189080710395e-1,
    6.110558511587876528211995e-1,
    3.119963221604380633960784e-1,
    8.286124387290277964432027e-2,
    9.202133538962367972970163e-3};
constexpr double k_db14[] = {
    -1.787139968311359076334193e-7,
    1.724994675367812769885713e-6,
    -4.389704901781394115254043e-6,
    -1.033720918457077394661407e-5,
    6.875504252697509603873437e-5,
    -4.17772457703725973526798e-5,
    -3.868319473129544821076663e-4,
    7.080211542355278586442978e-4,
    1.061691085606761843032567e-3,
    -3.849638868022187445786349e-3,
    -7.462189892683849371817161e-4,
    1.278949326633340896157331e-2,
    -5.615049530356959133218371e-3,
    -3.018535154039063518714823e-2,
    2.698140830791291697399031e-2,
    5.523712625921604411618834e-2,
    -7.154895550404613073584145e-2,
    -8.674841156816968904560822e-2,
    1.399890165844607012492943e-1,
    1.38395213864806591073994e-1,
    -2.180335299932760447555559e-1,
    -2.716885522787480414142192e-1,
    2.186706877589065214917476e-1,
    6.311878491048567795576617e-1,
    5.543056179408938359926831e-1,
    2.548502677926213536659078e-1,
    6.236475884939889832798567e-2,
    6.461153460087947818166397e-3};
constexpr double k_db15[] = {
    6.133359913305752029056299e-8,
    -6.316882325881664421201597e-7,
    1.811270407940577083768511e-6,
    3.362987181737579803124845e-6,
    -2.813329626604781364755325e-5,
    2.579269915531893680925862e-5,
    1.558964899205997479471658e-4,
    -3.59565244362468812164962e-4,
    -3.734823541376169920098094e-4,
    1.943323980382211541764912e-3,
    -2.417564907616242811667225e-4,
    -6.487734560315744995181683e-3,
    5.10100036040754316970886e-3,
    1.508391802783590236329274e-2,
    -2.081005016969308167788483e-2,
    -2.576700732843996258594526e-2,
    5.47805505845076126891379e-2,
    3.387714392350768620854818e-2,
    -1.11120936037231693365671e-1,
    -3.966617655579094448384367e-2,
    1.901467140071229823484893e-1,
    6.528295284877281692283108e-2,
    -2.888825965669656462484125e-1,
    -1.932041396091454287063991e-1,
    3.390025354547315276912641e-1,
    6.458131403574243581764209e-1,
    4.926317717081396236067757e-1,
    2.060238639869957315398915e-1,
    4.674339489276627189170969e-2,
    4.538537361578898881459395e-3};
constexpr double k_db16[] = {
    -2.109339630100743097000573e-8,
    2.308784086857545866405413e-7,
    -7.363656785451205512099696e-7,
    -1.043571342311606501525455e-6,
    1.133660866127625858758849e-5,
    -1.394566898820889345199078e-5,
    -6.103596621410935835162369e-5,
    1.747872452253381803801759e-4,
    1.142415200387223926440228e-4,
    -9.410217493595675889266454e-4,
    4.07896980849712836241747e-4,
    3.128023381206268831661203e-3,
    -3.644279621498389932169001e-3,
    -6.99001456341391667028425e-3,
    1.399376885982873102950452e-2,
    1.029765964095596941165001e-2,
    -3.688839769173014233352666e-2,
    -7.588974368857737638494891e-3,
    7.592423604427631582148499e-2,
    -6.239722752474871765674503e-3,
    -1.323883055638103904500474e-1,
    2.734026375271604136485246e-2,
    2.11190693947104288720968e-1,
    -2.79182081330282766826452e-2,
    -3.270633105279177046462906e-1,
    -8.975108940248964285718718e-2,
    4.402902568863569000390869e-1,
    6.373563320837888986319852e-1,
    4.303127228460038137403925e-1,
    1.650642834888531178991253e-1,
    3.490771432367334641030147e-2,
    3.189220925347738029769548e-3};
constexpr double k_db17[] = {
    7.267492968561608110879767e-9,
    -8.423948446002680178787071e-8,
    2.957700933316856754979905e-7,
    3.016549609994557415605208e-7,
    -4.505942477222988194102268e-6,
    6.99060098507675127320455e-6,
    2.318681379874595084482068e-5,
    -8.204803202453391839095483e-5,
    -2.561010956654845882729891e-5,
    4.394654277686436778385678e-4,
    -3.281325194098379713954444e-4,
    -1.43684530480297612622289e-3,
    2.30120524215354562430206e-3,
    2.967996691526094872806485e-3,
    -8.602921520322854831713706e-3,
    -3.042989981354637068592483e-3,
    2.273367658394627031845616e-2,
    -3.27095553581929378165536e-3,
    -4.692243838926973733300897e-2,
    2.231233617810379595339136e-2,
    8.110598665416088507965886e-2,
    -5.709141963167692728911239e-2,
    -1.268156917782863110948571e-1,
    1.0113548917747027215097e-1,
    1.973105895650109927854047e-1,
    -1.265997522158827028744679e-1,
    -3.283207483639617360909665e-1,
    2.731497040329363500431251e-2,
    5.183157640569378393254539e-1,
    6.109966156846228181886679e-1,
    3.703507241526411504492548e-1,
    1.312149033078244065775506e-1,
    2.598539370360604338914865e-2,
    2.241807001037312853535963e-3};
constexpr double k_db18[] = {
    -2.507934454948598267195173e-9,
    3.068835863045174800935478e-8,
    -1.176098767028231698450982e-7,
    -7.691632689885176146000153e-8,
    1.768712983627615455876329e-6,
    -3.332634478885821888782452e-6,
    -8.520602537446695203919255e-6,
    3.741237880740038181092208e-5,
    -1.53591712353472467506977e-7,
    -1.986485523117479485798245e-4,
    2.135815619103406884039053e-4,
    6.28465682965145712561945e-4,
    -1.340596298336106629517567e-3,
    -1.118732666992497072800659e-3,
    4.94334360546673813066553e-3,
    1.186300338581174657301742e-4,
    -1.305148094661200177277636e-2,
    6.262167954305707485236093e-3,
    2.667070592647059029987909e-2,
    -2.37332103958600010327521e-2,
    -4.452614190298232471556144e-2,
    5.705124773853688412090769e-2,
    6.488721621190544281947578e-2,
    -1.067522466598284855932201e-1,
    -9.233188415084628060429373e-2,
    1.670813127632574045149318e-1,
    1.495339755653777893509302e-1,
    -2.164809340051429711237679e-1,
    -2.936540407365587442479031e-1,
    1.472231119699281415750977e-1,
    5.71801654888651335289112e-1,
    5.718268077666072234818589e-1,
    3.146789413370316990571998e-1,
    1.03588465822423596224191e-1,
    1.928853172414637705921392e-2,
    1.576310218440760431540745e-3};
constexpr double k_db19[] = {
    8.666848838997619350323014e-10,
    -1.116402067035825816390505e-8,
    4.636937775782604223430858e-8,
    1.44708829879784454207822e-8,
    -6.862755657769142701883555e-7,
    1.531931476691193063931832e-6,
    3.010964316296526339695334e-6,
    -1.664017629715494454620678e-5,
    5.105950487073886053049223e-6,
    8.711270467219922965416862e-5,
    -1.246007917341587753449784e-4,
    -2.606761356786280057318315e-4,
    7.358025205054352070260482e-4,
    3.418086534585957765651657e-4,
    -2.687551800701582003957364e-3,
    7.689543592575483559749139e-4,
    7.040747367105243153014511e-3,
    -5.866922281012174726584493e-3,
    -1.398838867853514163250401e-2,
    1.937554988917612764637094e-2,
    2.162376740958504713032984e-2,
    -4.567422627723090805645444e-2,
    -2.650123625012304089901836e-2,
    8.690675555581223248847645e-2,
    2.758435062562866875014744e-2,
    -1.427856950387365749779603e-1,
    -3.351854190230287868169388e-2,
    2.123497433062784888090609e-1,
    7.465226970810326636763433e-2,
    -2.858386317558262418545976e-1,
    -2.280913942154826463746326e-1,
    2.608949526510388292872457e-1,
    6.017045491275378948867077e-1,
    5.244363774646549153360576e-1,
    2.6438843174089678467481e-1,
    8.127811326545955065296307e-2,
    1.428109845076439737439889e-2,
    1.108669763181710571099154e-3};
constexpr double k_db20[] = {
    -2.998836489619319566407767e-10,
    4.056127055551832766099146e-9,
    -1.814843248299695973210605e-8,
    2.014322023550512694324758e-10,
    2.633924226270001084129058e-7,
    -6.847079597000556894163335e-7,
    -1.011994010018886150340475e-6,
    7.241248287673620102843106e-6,
    -4.376143862183996810373096e-6,
    -3.710586183394712864227221e-5,
    6.774280828377729558011184e-5,
    1.015328897367029050797489e-4,
    -3.851047486992176060650289e-4,
    -5.349759843997695051759716e-5,
    1.392559619323136323905255e-3,
    -8.315621728225569192482585e-4,
    -3.58149425960962277755617e-3,
    4.42054238704579096305823e-3,
    6.721627302259456835336851e-3,
    -1.381052613715192007819606e-2,
    -8.78932492390156134875365e-3,
    3.229429953076958175885441e-2,
    5.87468181181182649130068e-3,
    -6.172289962468045973318658e-2,
    5.632246857307435506953247e-3,
    1.022917191744425578861014e-1,
    -2.471682733861358401587992e-2,
    -1.554587507072679559315308e-1,
    3.985024645777120219790581e-2,
    2.282910508199163229728429e-1,
    -1.672708830907700757517175e-2,
    -3.267868004340349674031123e-1,
    -1.392120880114838725806971e-1,
    3.615022987393310629195603e-1,
    6.104932389385938201631516e-1,
    4.726961853109016963710241e-1,
    2.199421135513970450080336e-1,
    6.342378045908151497587347e-2,
    1.054939462495039832454481e-2,
    7.799536136668463215861995e-4};
constexpr double k_db21[] = {
    1.038805571023706553035373e-10,
    -1.47195419765036526518955e-9,
    7.058033541231121859020948e-9,
    -2.254014974673330131563185e-9,
    -1.000400879030597332045461e-7,
    2.992136630464852794401295e-7,
    3.166095442367030556603889e-7,
    -3.090017164545699197158556e-6,
    2.79033053981448704610617e-6,
    1.535482509276049283124233e-5,
    -3.499665984987447953974079e-5,
    -3.635520250086338309442855e-5,
    1.936646504165080615323697e-4,
    -3.196406277680437193708834e-5,
    -6.906711170821016507268939e-4,
    6.394185005120302146432544e-4,
    1.716607040630624138494506e-3,
    -2.95837403893283128075077e-3,
    -2.891334348588901247375269e-3,
    8.988824381971911875349463e-3,
    2.403470920805434762380632e-3,
    -2.089205367797907948785235e-2,
    3.357756390338110842532605e-3,
    3.972683542785044175197464e-2,
    -1.865385920211851534093244e-2,
    -6.497750489373232063332311e-2,
    4.572340574922879239251203e-2,
    9.66003903237242207023219e-2,
    -8.177594298086382887387304e-2,
    -1.399404249325472249247759e-1,
    1.152332984396871041993434e-1,
    2.115645276808723923846782e-1,
    -1.123970715684509813515005e-1,
    -3.356640895305295094832979e-1,
    -3.572291961725529045922914e-2,
    4.445904519276003403643291e-1,
    6.015060949350038975629881e-1,
    4.196879449393627730946851e-1,
    1.813596254403815156260379e-1,
    4.924777153817727491399853e-2,
    7.776639052354783754338787e-3,
    5.488225098526837086776337e-4};
constexpr double k_db22[] = {
    -3.602113484339554703794808e-11,
    5.335938821667489905169783e-10,
    -2.729623146632976083449327e-9,
    1.680171404922988885554331e-9,
    3.761228749337362366156712e-8,
    -1.283336228751754417819694e-7,
    -8.779879873361286276888117e-8,
    1.295182057318877573889711e-6,
    -1.565179131995160159307427e-6,
    -6.166729316467578372152252e-6,
    1.737375695756189356163565e-5,
    1.137434966212593172736144e-5,
    -9.40522363481576042184519e-5,
    4.345899904532003379046993e-5,
    3.286094142136787341983758e-4,
    -4.237873998391800799531948e-4,
    -7.706909881231196232880373e-4,
    1.827010495657279080112597e-3,
    1.044260739186025323350756e-3,
    -5.455691986156717076595353e-3,
    3.001373985076435951229129e-4,
    1.256472521834337406887018e-2,
    -6.213782849364658499069336e-3,
    -2.348000134449318868560143e-2,
    2.05867076275653604406025e-2,
    3.697084662069802057615319e-2,
    -4.653081182750671347875834e-2,
    -5.13642542974441324572795e-2,
    8.455737636682607503362814e-2,
    6.807631439273221556739202e-2,
    -1.317681376866834107513649e-1,
    -9.711079840911470969274209e-2,
    1.799731879928913037252154e-1,
    1.640931881067664818606223e-1,
    -2.005684061048870939324361e-1,
    -3.127265804282961918033226e-1,
    7.372450118363015165570139e-2,
    5.079010906221639018391523e-1,
    5.784327310095244271421182e-1,
    3.677286834460374788614691e-1,
    1.483675408901114285014404e-1,
    3.806993723641108494769873e-2,
    5.721854631334539120809783e-3,
    3.862632314910982158524359e-4};
constexpr double k_db23[] = {
    1.250203302351040941433217e-11,
    -1.932405111313417542192652e-10,
    1.050446453696543404071105e-9,
    -9.472885901812050535221582e-10,
    -1.39993549543799884513091e-8,
    5.417549179539278736503176e-8,
    1.8530917856339650193537e-8,
    -5.339005405209421154584784e-7,
    8.147574834779447778085443e-7,
    2.39756954684024005740374e-6,
    -8.347875567854625544366044e-6,
    -2.635207889249186237209226e-6,
    4.426071203109246077621875e-5,
    -3.378894834120903434270962e-5,
    -1.500218503490340967673163e-4,
    2.567624520078737205563857e-4,
    3.19420492709901150367653e-4,
    -1.061231228886651321139358e-3,
    -2.465014005163512031940473e-4,
    3.122876449818144997419145e-3,
    -1.134865473356251691289337e-3,
    -7.075319273706152814194039e-3,
    6.031840650024162816289878e-3,
    1.275194393152828646243157e-2,
    -1.753710100303584537915846e-2,
    -1.85235136501561597979469e-2,
    3.849533252256919901057154e-2,
    2.176585683449997560776882e-2,
    -7.020739157490110946204219e-2,
    -2.112621235622724100704783e-2,
    1.122970436181072886950734e-1,
    2.028307457564929974897287e-2,
    -1.640113215318759250156058e-1,
    -3.303744709428937875006613e-2,
    2.235736582420402317149514e-1,
    9.212540708241805260646031e-2,
    -2.71402098607843055660407e-1,
    -2.613921480306441118856796e-1,
    1.813926253638400136259098e-1,
    5.510185172419193913452724e-1,
    5.449311478735204282674241e-1,
    3.184508138528652363416528e-1,
    1.205155317839719336306054e-1,
    2.931000365788411514736204e-2,
    4.202748893183833538390034e-3,
    2.719041941282888414192674e-4};
constexpr double k_db24[] = {
    -4.342782503803710247259038e-12,
    6.991801157638230974132696e-11,
    -4.0246586445843797742515e-10,
    4.748375824256231118094454e-10,
    5.157776789671999638950774e-9,
    -2.255740388176086107368822e-8,
    -5.057645419792500308492509e-10,
    2.166339653278574639176394e-7,
    -4.032507756879971624098983e-7,
    -8.980253143938407724149927e-7,
    3.901100338597702610409014e-6,
    1.341157750809114719319938e-8,
    -2.02288829261269768286086e-5,
    2.183241460466558363365044e-5,
    6.559388639305634085303739e-5,
    -1.460079817762616838924302e-4,
    -1.181233237969554740613021e-4,
    5.861270593183109933716735e-4,
    -4.416184856141520063365959e-5,
    -1.696456818974824394274535e-3,
    1.153764936839481504858282e-3,
    3.736046178282523345179052e-3,
    -4.746568786323113800477797e-3,
    -6.291435370018187780721844e-3,
    1.304997087108573583052494e-2,
    7.6617218816465858973299e-3,
    -2.821310709490189098113895e-2,
    -4.94470942812562829981592e-3,
    5.130162003998087915555335e-2,
    -4.578436241819221637997516e-3,
    -8.216165420800166702291466e-2,
    2.098011370914481534980884e-2,
    1.210163034692242362312637e-1,
    -3.877717357792001620177595e-2,
    -1.711753513703468896897639e-1,
    4.252872964148383258147364e-2,
    2.392373887803108551973268e-1,
    4.776613684344728187950198e-3,
    -3.179430789993627375453948e-1,
    -1.872714068851562376981887e-1,
    2.809855532337118833442626e-1,
    5.749392210955419968460808e-1,
    5.043710408399249919771877e-1,
    2.729089160677263268706137e-1,
    9.726223583362519663806546e-2,
    2.248233994971641072358415e-2,
    3.082081714905494436206199e-3,
    1.914358009475513695026138e-4};
constexpr double k_db25[] = {
    1.509692082823910867903368e-12,
    -2.527625163465644811048864e-11,
    1.535901570162657197021928e-10,
    -2.228474910228168899314793e-10,
    -1.880415755062155537197783e-9,
    9.279224480081372372250073e-9,
    -2.611598556111770864259843e-9,
    -8.656941732278507163388032e-8,
    1.922806790142371601278104e-7,
    3.212037518862519094895006e-7,
    -1.779201332653634562565949e-6,
    5.232827708153076417963912e-7,
    8.99066139306258890536993e-6,
    -1.277195293199783804144904e-5,
    -2.733048119960041746353244e-5,
    7.904640003965528255137496e-5,
    3.54371452327605900528429e-5,
    -3.098800990984697989530544e-4,
    1.153212440466300456460181e-4,
    8.772581936748274843488806e-4,
    -8.999774237462950491085383e-4,
    -1.84248429020333128083778e-3,
    3.322707773973191780118197e-3,
    2.726936258738495739871469e-3,
    -8.860702618046368399013064e-3,
    -1.989425782202736494289462e-3,
    1.892280447662762841086581e-2,
    -3.079836794847036661636694e-3,
    -3.404232046065334099320629e-2,
    1.554260592910229163981296e-2,
    5.361790939877949960629041e-2,
    -3.717396286112250887598137e-2,
    -7.708411105657419356208568e-2,
    6.675216449401860666895983e-2,
    1.066338050184779528831275e-1,
    -9.850861528996022153725953e-2,
    -1.505602137505796309518094e-1,
    1.181552867199598604563068e-1,
    2.245378197451017129525177e-1,
    -8.758761458765466140226688e-2,
    -3.36473079641746130956211e-1,
    -9.717464096463814276130048e-2,
    3.67885074802946698437132e-1,
    5.816368967460577833534892e-1,
    4.596834151460945937896974e-1,
    2.316935078860218199900622e-1,
    7.803586287213267559750659e-2,
    1.718674125404015533817187e-2,
    2.256959591854779520121391e-3,
    1.348029793470188994578489e-4};
constexpr double k_db26[] = {
    -5.251871224244435037810503e-13,
    9.130510016371796243923233e-12,
    -5.840408185341171468465492e-11,
    1.002303191046526913509282e-10,
    6.780047245828636668305808e-10,
    -3.776010478532324328184044e-9,
    2.169328259850323106986222e-9,
    3.407795621290730008673832e-8,
    -8.904466370168590769052983e-8,
    -1.079004237578671411922962e-7,
    7.939210633709952088373459e-7,
    -4.650463220640262639231146e-7,
    -3.88740016185679518758779e-6,
    7.000078682964986734859102e-6,
    1.074221540872195031273584e-5,
    -4.109673996391477816326502e-5,
    -5.277795493037868976293567e-6,
    1.574795238607493590547766e-4,
    -1.060574748283803889966151e-4,
    -4.319557074261807466712902e-4,
    6.161382204574344193703789e-4,
    8.383488056543616046381924e-4,
    -2.145530281567620980305401e-3,
    -9.390582504738289646165699e-4,
    5.601947239423804853206514e-3,
    -5.287383992626814439198631e-4,
    -1.178549790619302893728624e-2,
    5.829580555318887971939316e-3,
    2.07349201799638247588779e-2,
    -1.776090356835818354094299e-2,
    -3.137811036306775484244645e-2,
    3.853571597111186425832145e-2,
    4.223218579637203541206571e-2,
    -6.865475960403591525454725e-2,
    -5.344856168148319149493577e-2,
    1.064824052498086303236594e-1,
    6.982318611329236513756592e-2,
    -1.479771932752544935782315e-1,
    -1.043239002859270439148009e-1,
    1.827554095896723746537534e-1,
    1.81291832311122696070546e-1,
    -1.748399612893925042664836e-1,
    -3.263845936917800216385341e-1,
    1.774076780986685727823534e-3,
    4.391583117891662321931478e-1,
    5.736690430342222603195557e-1,
    4.132929622783563686116109e-1,
    1.950394387167700994245892e-1,
    6.227474402514960484193582e-2,
    1.30975542925585008205777e-2,
    1.650520233532988247022385e-3,
    9.493795750710592117802731e-5};
constexpr double k_db27[] = {
    1.82818835288242493362453e-13,
    -3.295790122476585807069954e-12,
    2.213662088067662485181473e-11,
    -4.374986224293654395069948e-11,
    -2.415526928011130660506396e-10,
    1.521614984778521740775073e-9,
    -1.309465606856955151282042e-9,
    -1.321332273990056558848618e-8,
    4.026255052866908637178683e-8,
    3.286558968055159530983262e-8,
    -3.472468147394389269364673e-7,
    3.050880686251999094242672e-7,
    1.634369624725637835424611e-6,
    -3.65750090818710499704576e-6,
    -3.901164070638425528170558e-6,
    2.063442647736885318487206e-5,
    -3.517483614907445391752738e-6,
    -7.711145517797584208411721e-5,
    7.660058387068576876674275e-5,
    2.019719879690326857104209e-4,
    -3.879018574101327604369144e-4,
    -3.418351226915427611946547e-4,
    1.301177450244135139135788e-3,
    1.457529625931728587128588e-4,
    -3.3328544695200061627633e-3,
    1.342626877303679609082209e-3,
    6.856635609684880675273184e-3,
    -5.862096345462925972966025e-3,
    -1.15771864589762814005409e-2,
    1.566559564892457873003264e-2,
    1.614696692239566682272153e-2,
    -3.273906663102087145481936e-2,
    -1.851249356199807710545838e-2,
    5.796940573471798814748841e-2,
    1.731101826549371089085675e-2,
    -9.102290652956591798241346e-2,
    -1.406275155580876537026622e-2,
    1.311979717171553289711407e-1,
    1.579939746024048431173908e-2,
    -1.780317409590085821070366e-1,
    -3.878641863180231062443347e-2,
    2.272732884141708265275037e-1,
    1.148230195177853576326445e-1,
    -2.482645819032605667810198e-1,
    -2.897168033145948463175311e-1,
    1.028408550618229112710739e-1,
    4.934061226779989979265447e-1,
    5.53849860990480048760546e-1,
    3.671102141253898226423388e-1,
    1.629220275023933206396286e-1,
    4.945259998290488004302996e-2,
    9.952588780876619771874091e-3,
    1.205531231673213234252e-3,
    6.687131385431931734918881e-5};
constexpr double k_db28[] = {
    -6.367772354714857335632692e-14,
    1.188850533405901520842322e-12,
    -8.36549047125880079934929e-12,
    1.867367263783390418963879e-11,
    8.492220011056382105461206e-11,
    -6.077041247229010224760245e-10,
    6.944540328946226952976705e-10,
    5.044047056383436444631253e-9,
    -1.784138690875710077191714e-8,
    -8.262387315626556965966429e-9,
    1.49066001353536217098934e-7,
    -1.757461173209842779903676e-7,
    -6.67021547995489258874745e-7,
    1.840363734517769191684379e-6,
    1.247900317574834146052382e-6,
    -1.004326041333422601781849e-5,
    4.638664981394294654002871e-6,
    3.641401211050802781223451e-5,
    -4.907713416190250858324784e-5,
    -8.903901490044488099517361e-5,
    2.295790982233456202366622e-4,
    1.154656063658921251969298e-4,
    -7.48674955911462999132068e-4,
    1.415672393140464257573781e-4,
    1.875998668202795626152767e-3,
    -1.36037384563969243657765e-3,
    -3.725461247074254799171428e-3,
    4.784863112454241718009917e-3,
    5.838816627748944864497371e-3,
    -1.206359196821849005842467e-2,
    -6.815549764552309639259447e-3,
    2.468806001015186586264188e-2,
    4.431732910062988320487419e-3,
    -4.333336861608628393863255e-2,
    3.448018955540951137600472e-3,
    6.774789550190933956165342e-2,
    -1.734192283130589908795582e-2,
    -9.768535580565244174963692e-2,
    3.447863127509970524678535e-2,
    1.346275679102260877490923e-1,
    -4.683823374455167616514752e-2,
    -1.828773307329849166920409e-1,
    3.690688531571127205290633e-2,
    2.45808151373759553575295e-1,
    3.285787916338710468450548e-2,
    -3.013278095326417816909366e-1,
    -2.304989540475825257279398e-1,
    2.001761440459844380384405e-1,
    5.305162934414858075256978e-1,
    5.249982316303355562348293e-1,
    3.225633612855224257318486e-1,
    1.351379142536410450770749e-1,
    3.909260811540534426092084e-2,
    7.542650377646859177160196e-3,
    8.794985159843870273564637e-4,
    4.710807775014051101066545e-5};
constexpr double k_db29[] = {
    2.219191311588302960934662e-14,
    -4.285654870068344101898185e-13,
    3.15276241337031042379754e-12,
    -7.832509733627817032356557e-12,
    -2.940589250764532582888474e-11,
    2.407099453509342962399812e-10,
    -3.426800863263089001811012e-10,
    -1.893995386171984147774611e-9,
    7.768978854770062238895965e-9,
    1.076591906619196137385202e-9,
    -6.286156922010786166768503e-8,
    9.387197411095863026484411e-8,
    2.633898386997696553900968e-7,
    -8.975701750636280734511652e-7,
    -3.029054592052818286474228e-7,
    4.750609246452552850197118e-6,
    -3.593644804025187638066915e-6,
    -1.657328395306616289863396e-5,
    2.913344750169041218495787e-5,
    3.645026068562774967665464e-5,
    -1.293044840080720609161467e-4,
    -2.292018041214499897382298e-5,
    4.111283454742767033424741e-4,
    -2.000711363076779808296301e-4,
    -1.000778327085680541055697e-3,
    1.087053942226062966738944e-3,
    1.877120925723650133179338e-3,
    -3.47379898968110063064979e-3,
    -2.550807127789472659145072e-3,
    8.469725493560752287772962e-3,
    1.737880332720511164430028e-3,
    -1.704122457360668969234197e-2,
    2.648327307678167915542398e-3,
    2.947043187174764111028122e-2,
    -1.291714255426679462966474e-2,
    -4.518798127778834515979704e-2,
    3.053154327270413646637328e-2,
    6.347916458421186633577789e-2,
    -5.502748952532572320924541e-2,
    -8.512549261563550232832311e-2,
    8.322074716244975790297349e-2,
    1.144722958938182579734136e-1,
    -1.078459499387214201077882e-1,
    -1.608779885941877360771615e-1,
    1.124191748731883764769741e-1,
    2.361052361530259415983111e-1,
    -5.570680007294085781514542e-2,
    -3.300409489175880520295084e-1,
    -1.540287344599000542466294e-1,
    2.891052383358291634605691e-1,
    5.513744327583751951223746e-1,
    4.897588047621993143592706e-1,
    2.806534559709829376968881e-1,
    1.113701169517405304762186e-1,
    3.077358022140837676716707e-2,
    5.702126517773375434760844e-3,
    6.409516803044434540833707e-4,
    3.318966279841524761813546e-5};
constexpr double k_db30[] = {
    -7.737942630954405708679963e-15,
    1.543997570847620046003616e-13,
    -1.185237592101582328254231e-12,
    3.239428638532286114355931e-12,
    1.000105131393171192746338e-11,
    -9.461387997276802120884526e-11,
    1.613622978270904360610419e-10,
    6.984862691832182584221097e-10,
    -3.331105680467578245901976e-9,
    5.553397861397053982967618e-10,
    2.605442754977625431940886e-8,
    -4.764379965139453357729155e-8,
    -1.000414682354500898864979e-7,
    4.261662326011572446469849e-7,
    1.099474338526203304286307e-8,
    -2.187267676996166416699555e-6,
    2.327549098493686509557358e-6,
    7.252145535890469015723401e-6,
    -1.636152478725426488654529e-5,
    -1.339716863293971629296315e-5,
    6.982008370808327851082027e-5,
    -8.548305467584070994787825e-6,
    -2.161718301169633804271039e-4,
    1.72482584235170972554576e-4,
    5.050948239033467796256545e-4,
    -7.678782504380918697963922e-4,
    -8.609276968110423879660725e-4,
    2.324520094060099304385756e-3,
    8.433845866620933982126004e-4,
    -5.530730148192003288871384e-3,
    6.196717564977244383592535e-4,
    1.091563165830488927536881e-2,
    -5.296859666131086629169939e-3,
    -1.83997438681173411872817e-2,
    1.528796076985739546052897e-2,
    2.707861959529418272206848e-2,
    -3.226375891935220815954913e-2,
    -3.56733974967596096578082e-2,
    5.671236574473569492590637e-2,
    4.380166467141773250305408e-2,
    -8.765869003638366048026572e-2,
    -5.380646545825707676022015e-2,
    1.227477460450093778691579e-1,
    7.277865897036442699893544e-2,
    -1.572368179599938126878197e-1,
    -1.145582194327077814891519e-1,
    1.778298732448367361280251e-1,
    1.99462121580664303242899e-1,
    -1.419685133300829310219026e-1,
    -3.329669750208556069196849e-1,
    -6.618367077593731501909741e-2,
    3.662426833716279793144871e-1,
    5.575722329128364304078083e-1,
    4.504878218533178366981352e-1,
    2.4202067094021409944676e-1,
    9.123830406701570679321576e-2,
    2.41308326715883789519492e-2,
    4.300797165048069510045017e-3,
    4.666379504285509336662e-4,
    2.338616172731421471474407e-5};
constexpr double k_db31[] = {
    2.699382879762665647295494e-15,
    -5.559442050579014337641376e-14,
    4.445467096291932163298412e-13,
    -1.324334917243963163878274e-12,
    -3.327008967125979929910636e-12,
    3.692108808871129411604189e-11,
    -7.348930032486263904766914e-11,
    -2.524043954153353306183644e-10,
    1.408568151025177427076548e-9,
    -6.474311687959861398702582e-10,
    -1.061529602150252306500404e-8,
    2.328309713821409644308539e-8,
    3.616826517331004805247567e-8,
    -1.975925129170206248152121e-7,
    5.327250656974915426977441e-8,
    9.810015422044371573950976e-7,
    -1.36906023094294078205049e-6,
    -3.035142365891509630069008e-6,
    8.795301342692987765440618e-6,
    4.034520235184278839752741e-6,
    -3.631255157860086164261314e-5,
    1.501335727444532997071652e-5,
    1.089584350416766882738652e-4,
    -1.24341161725022866940918e-4,
    -2.396583469402949615285647e-4,
    4.998816175637222614896912e-4,
    3.431398296904734438118401e-4,
    -1.459041741985160943114515e-3,
    -6.397901106014600492881202e-5,
    3.393066776715931928419359e-3,
    -1.428264223218909891400516e-3,
    -6.52085237587461255332547e-3,
    5.51616357331099256656129e-3,
    1.051763948737184089128633e-2,
    -1.390055293926652880755899e-2,
    -1.4276275277763519433098e-2,
    2.804761936675616906861927e-2,
    1.615417156598591113619454e-2,
    -4.861907546485433003537603e-2,
    -1.488002661810482202699556e-2,
    7.53536117432814069552829e-2,
    1.094129745236496925725238e-2,
    -1.076127733234956326668606e-1,
    -8.139832273469236863527709e-3,
    1.450895009319931981518943e-1,
    1.543698842948893409652995e-2,
    -1.869623608957154494374577e-1,
    -4.992634916046823977000579e-2,
    2.249667114737370933697298e-1,
    1.401782887652732681656253e-1,
    -2.179784855235633521693545e-1,
    -3.10955118319507518692656e-1,
    2.716921249736946422305355e-2,
    4.294688082061372955430413e-1,
    5.511398409142754983590485e-1,
    4.091922000374278563928213e-1,
    2.070128744852353286198055e-1,
    7.433609301164788697908776e-2,
    1.885369161298591269159569e-2,
    3.236884068627721221829663e-3,
    3.39412203776995669915716e-4,
    1.648013386456140748122178e-5};
constexpr double k_db32[] = {
    -9.421019139535078421314655e-16,
    2.000715303810524954375796e-14,
    -1.663800489433402369889818e-13,
    5.361482229611801638107331e-13,
    1.075610653501062115165735e-12,
    -1.430918765169202320188022e-11,
    3.263270741332907875981845e-11,
    8.904723796221605490455388e-11,
    -5.881091462634605628881794e-10,
    4.384387799940474369553237e-10,
    4.250422311980592983740943e-9,
    -1.104383021722648979552131e-8,
    -1.219924359483373093110397e-8,
    8.965966311957728376981485e-8,
    -5.003361868748230293692887e-8,
    -4.285970693151457255418342e-7,
    7.560047625595947819392627e-7,
    1.202889036321620990296134e-6,
    -4.558309576264423135123964e-6,
    -6.361781532260254953363913e-7,
    1.82426840198069122060385e-5,
    -1.29404577940551272395048e-5,
    -5.259809282684322782648914e-5,
    8.103678329134838389828092e-5,
    1.053915461739828114700905e-4,
    -3.059654423826911750479261e-4,
    -1.024537310607396186949657e-4,
    8.673058518450555343925662e-4,
    -2.211678729579097916278098e-4,
    -1.964740555821778254183648e-3,
    1.468955100468467772528812e-3,
    3.627224640687864960122123e-3,
    -4.649216751184411528658095e-3,
    -5.411568257275791208581502e-3,
    1.101740071540688116532806e-2,
    6.16752731068567511257906e-3,
    -2.166282283639119347634779e-2,
    -4.1459076608272187814607e-3,
    3.705145792354468010437633e-2,
    -2.380264464932573834443178e-3,
    -5.692631406247843550478416e-2,
    1.410615151610660772869739e-2,
    8.087414063848395744090832e-2,
    -2.962787250844770491204452e-2,
    -1.094561131160893831027723e-1,
    4.44049081999397402264062e-2,
    1.452320794752866460838831e-1,
    -4.899511718467173853355943e-2,
    -1.921023447085468984341365e-1,
    2.466244483969740441701479e-2,
    2.483106423568801736064852e-1,
    6.47133548055162383100009e-2,
    -2.774215815584272153338153e-1,
    -2.666981814766755535489784e-1,
    1.206305382656178269538099e-1,
    4.778091637339484033555131e-1,
    5.343179193409538322901118e-1,
    3.67509628597349636199534e-1,
    1.7575078363943889881893e-1,
    6.025749912033537081745452e-2,
    1.468104638141913563547809e-2,
    2.431261919572266100780423e-3,
    2.466566906380903352739104e-4,
    1.161463302135014885567464e-5};
constexpr double k_db33[] = {
    3.289373678416306368625564e-16,
    -7.196510545363322414033654e-15,
    6.214740247174398315576215e-14,
    -2.152488386833302618520604e-13,
    -3.343481218953278765982533e-13,
    5.509414720765524548752674e-12,
    -1.420236859889936792437078e-11,
    -3.049574453945863430361297e-11,
    2.426833102305682309891303e-10,
    -2.496402105246193648073519e-10,
    -1.67139267725193249517322e-9,
    5.111211857347453839549367e-9,
    3.672863576838181340505564e-9,
    -3.987838198518880722819503e-8,
    3.377972703730854377516207e-8,
    1.822443332571053437467129e-7,
    -3.985791291985944076942627e-7,
    -4.426923407952870147984002e-7,
    2.288371276141527305481396e-6,
    -3.607516102879771631230351e-7,
    -8.866121366757736169176034e-6,
    9.070805757828453800203677e-6,
    2.423335398816890365621188e-5,
    -4.929564423417301834310231e-5,
    -4.160438516273709306234369e-5,
    1.780431898251245351831728e-4,
    4.393166251766185755059005e-6,
    -4.908329007590351474487792e-4,
    2.727305847336937211749282e-4,
    1.074380696351291355073899e-3,
    -1.204309257604658876916645e-3,
    -1.860718214455795912074482e-3,
    3.480800953405711999411461e-3,
    2.389062408165908575935816e-3,
    -7.953540387057939240459305e-3,
    -1.594288782414604768637856e-3,
    1.531695411585766548347442e-2,
    -2.167758617353607324783299e-3,
    -2.572876175473297336123211e-2,
    1.070326582001954942654535e-2,
    3.868706076024496481748675e-2,
    -2.524858297747649929258392e-2,
    -5.347125133582228919431111e-2,
    4.57345618938966774313904e-2,
    7.019114394099653254998936e-2,
    -7.030248505405615921453281e-2,
    -9.114696835133148913093154e-2,
    9.478808805061595889263192e-2,
    1.219678564037346149389135e-1,
    -1.108441331167107910806085e-1,
    -1.714280990518593279308738e-1,
    9.98515586803381569813964e-2,
    2.454206121192791114179964e-1,
    -1.927833943695275915600583e-2,
    -3.159974107665602561905181e-1,
    -2.042026223985421049629055e-1,
    2.095823507130554216526494e-1,
    5.112547705832674655425832e-1,
    5.093761725149396552227893e-1,
    3.267181301177075783930753e-1,
    1.481863131800528081784674e-1,
    4.861466653171619508385708e-2,
    1.139594337458160925830841e-2,
    1.822709435164084208084618e-3,
    1.791016153702791479424389e-4,
    8.186358314175091939858946e-6};
constexpr double k_db34[] = {
    -1.148944754480590128244816e-16,
    2.587338381935699555813538e-15,
    -2.317083703906408481078257e-14,
    8.579194051799733179793112e-14,
    9.799451158211597727901179e-14,
    -2.10787910891530154628537e-12,
    6.080125354000167254059026e-12,
    1.004208735461769864836516e-11,
    -9.90477453763240901547953e-11,
    1.300410318609415248880403e-10,
    6.446378210323402313101215e-10,
    -2.316501946995482751582294e-9,
    -8.665744261368722215864741e-10,
    1.740423332936068076497051e-8,
    -1.99034650153173691586618e-8,
    -7.526701740412589411177482e-8,
    2.025990666667859216690537e-7,
    1.448195708333185127061181e-7,
    -1.116306534817008428597995e-6,
    4.979718101421307748081858e-7,
    4.169871758547028398316762e-6,
    -5.71082651099830393827505e-6,
    -1.057657494257950623848316e-5,
    2.84495141969780737650308e-5,
    1.353117227249649581251887e-5,
    -9.914697770780134603580351e-5,
    2.660050018453441903046828e-5,
    2.650772397558057819755811e-4,
    -2.326732140233531635428863e-4,
    -5.527355762144197975516415e-4,
    8.75199906407868873261057e-4,
    8.589959874363661955444898e-4,
    -2.399453943537055863933125e-3,
    -7.692127975067836975989491e-4,
    5.33495076875993603217027e-3,
    -6.194748845153872839014357e-4,
    -1.004550670836151917439147e-2,
    4.713649260999809905918876e-3,
    1.640937419986519252112261e-2,
    -1.314398001665716086105828e-2,
    -2.367173792282636485046786e-2,
    2.72283507563541961009584e-2,
    3.073974657395934459931227e-2,
    -4.743855964527776247220681e-2,
    -3.701283841786244960356402e-2,
    7.318523543679560555546221e-2,
    4.357609464963129726428487e-2,
    -1.029475969928140852342074e-1,
    -5.448296806413904636632671e-2,
    1.3412596027113612848024e-1,
    7.79918469379481073826535e-2,
    -1.609249271778668063014799e-1,
    -1.273373582238011562843863e-1,
    1.666017504122074437311574e-1,
    2.169072201874275950610019e-1,
    -1.038919155156404718287261e-1,
    -3.315253015083869417715548e-1,
    -1.282468421744371672912378e-1,
    2.903663295072749510455945e-1,
    5.30555099656463177313326e-1,
    4.784787462793710621468611e-1,
    2.877650592337145629334257e-1,
    1.24152482111376808195445e-1,
    3.904884135178594138905026e-2,
    8.819889403884978803182765e-3,
    1.364061390059049998200014e-3,
    1.299476200679530037833485e-4,
    5.770510632730285627466068e-6};
constexpr double k_db35[] = {
    4.014628712333488654318569e-17,
    -9.298012529324185420921556e-16,
    8.624037434720089202680338e-15,
    -3.397720856796267431956784e-14,
    -2.597954328893848084315198e-14,
    8.015088533687900921948605e-13,
    -2.567065476155081449204644e-12,
    -3.125639357108557540598098e-12,
    4.000536627253744510742788e-11,
    -6.407938256501889018430608e-11,
    -2.433545573751672936168877e-10,
    1.0308233454854333838117e-9,
    5.897951310384361575470356e-11,
    -7.458116552893037631192408e-9,
    1.08490273378993482526656e-8,
    3.008188650719066928230269e-8,
    -9.990396944534900755781728e-8,
    -3.700308378205124537986403e-8,
    5.302368616904760917074353e-7,
    -3.903931733287306166657519e-7,
    -1.895929617693153288493891e-6,
    3.353345862871309889390877e-6,
    4.308047861716731191350493e-6,
    -1.572442077270281693663289e-5,
    -2.437001526827789860990429e-6,
    5.304143122913310222538318e-5,
    -2.976995962848509743944226e-5,
    -1.365883072261161602559927e-4,
    1.70001228366124904358469e-4,
    2.64832881996128903930281e-4,
    -5.864810318991817532175809e-4,
    -3.346692164250854961608526e-4,
    1.549637469702362975561719e-3,
    7.61596943517273654676965e-6,
    -3.357644380922383229567733e-3,
    1.428088794070762107355586e-3,
    6.137754586740521089596802e-3,
    -5.085991649233429881797637e-3,
    -9.57779789923570999814731e-3,
    1.228943600811871086161968e-2,
    1.276645671565674419403918e-2,
    -2.416949780166026740294881e-2,
    -1.436683978422007182104025e-2,
    4.125469306470509212749751e-2,
    1.32285495850365552445593e-2,
    -6.335603744044346612098888e-2,
    -9.318558949903924837875003e-3,
    8.991354757072954417865374e-2,
    4.73422917264194876329398e-3,
    -1.205855226433935545076589e-1,
    -4.752680834111350445288111e-3,
    1.552924803962371144206754e-1,
    1.930954466601835091947735e-2,
    -1.919195892985939528760787e-1,
    -6.526287131067753892154896e-2,
    2.172992893210892977675493e-1,
    1.660413574907809195438433e-1,
    -1.81786976766727832578835e-1,
    -3.238228649121161212147303e-1,
    -4.388388187393404111343479e-2,
    3.603456405180473278744459e-1,
    5.37008427509166102867069e-1,
    4.43592739224035437818391e-1,
    2.513073789944933128513252e-1,
    1.034044558614783789938788e-1,
    3.123628851149071453063391e-2,
    6.807292884319132011971334e-3,
    1.019122680375098109319315e-3,
    9.421469475576740631603028e-5,
    4.067934061148559026665247e-6};
constexpr double k_db36[] = {
    -1.403274175373190617489823e-17,
    3.339971984818693213132579e-16,
    -3.204628543401749860439317e-15,
    1.338071386299105896025579e-14,
    5.542263182639804235231686e-15,
    -3.029285026974877268896135e-13,
    1.070969357114017002424433e-12,
    8.8768462872173742135244e-13,
    -1.599716689261357143200397e-11,
    3.037429098112535221800014e-11,
    8.962418203859611987065968e-11,
    -4.512545778563249634425201e-10,
    1.090815553713751810964713e-10,
    3.138841695782424018351568e-9,
    -5.612784343327791397474114e-9,
    -1.156093688817008406756914e-8,
    4.799043465450992009934527e-8,
    2.753249073339512254085076e-9,
    -2.455377658434232699135878e-7,
    2.548423522556577831218519e-7,
    8.311421279707778528163597e-7,
    -1.870811602859180713762972e-6,
    -1.586145782434577495502615e-6,
    8.372218198160788432628056e-6,
    -1.183471059985615942783183e-6,
    -2.731390824654337912922346e-5,
    2.375106683660860777161951e-5,
    6.694741196930590257104232e-5,
    -1.131899468084665671727392e-4,
    -1.155118895843527096848377e-4,
    3.69350728496751050262004e-4,
    8.614565758992702032613879e-5,
    -9.463403823261101964604918e-4,
    2.776812795712026068152384e-4,
    1.990793771851737270404293e-3,
    -1.503074066296643749549364e-3,
    -3.484541445404883311209541e-3,
    4.413484835350575251918617e-3,
    5.022989106665829004699819e-3,
    -9.990263473281372348001744e-3,
    -5.657813245058818380424017e-3,
    1.906359478062535932877576e-2,
    3.984040198717004857397179e-3,
    -3.198072067763969654470294e-2,
    1.424972661765391603147803e-3,
    4.851308354780908538616268e-2,
    -1.131910031681742794381808e-2,
    -6.820901663681751124880436e-2,
    2.503872144956848989919484e-2,
    9.115678225801654406336059e-2,
    -3.9880853575513175840917e-2,
    -1.188037543101356316801817e-1,
    5.027618007353842862036817e-2,
    1.541062366276428841776316e-1,
    -4.586140074639271639145126e-2,
    -1.993372056086496198603363e-1,
    7.278515095792229009687682e-3,
    2.465372776089742110529709e-1,
    9.811420416311477050518401e-2,
    -2.468070369781255270524798e-1,
    -2.944210395891145711100716e-1,
    4.397519752934862993862183e-2,
    4.178753356009697863620635e-1,
    5.322668952607286914777445e-1,
    4.064336977082553467407794e-1,
    2.177569530979008149637946e-1,
    8.565209259526409083864717e-2,
    2.489056564482796484885927e-2,
    5.240297377409884366201604e-3,
    7.602151099668488285869793e-4,
    6.826028678546358691748629e-5,
    2.867925182755946334630479e-6};
constexpr double k_db37[] = {
    4.90661506493520369485769e-18,
    -1.199280335852879554967035e-16,
    1.189012387508252879928638e-15,
    -5.243025691884205832260355e-15,
    -4.51888960746372639445451e-16,
    1.138052830921439682522395e-13,
    -4.421612409872105367333573e-13,
    -2.096363194234800541614776e-13,
    6.334955440973913249611879e-12,
    -1.398415715537641487959552e-11,
    -3.203398244123241367987902e-11,
    1.946164894082315021308715e-10,
    -1.031411129096974965677951e-10,
    -1.297205001469435139867686e-9,
    2.793974465953982659829387e-9,
    4.224485706362419268050012e-9,
    -2.252193836724805775389816e-8,
    5.350657515461434290618743e-9,
    1.109031232216439389999036e-7,
    -1.509885388671583553484928e-7,
    -3.494948603445727645895195e-7,
    1.002121399297177629772998e-6,
    4.854731396996411681769912e-7,
    -4.309941556597092389020623e-6,
    1.849945003115590390789683e-6,
    1.354327718416781810683349e-5,
    -1.639162496160583099236044e-5,
    -3.098662927619930052417611e-5,
    7.055138782065465075838703e-5,
    4.336726125945695214852398e-5,
    -2.208944032455493852493631e-4,
    1.534439023195503211083339e-5,
    5.490532773373631230219769e-4,
    -3.280788470880198419407186e-4,
    -1.111484865318630197259018e-3,
    1.263934258117477182626761e-3,
    1.816871343801423525477185e-3,
    -3.394523276408398601988476e-3,
    -2.248053187003824706127277e-3,
    7.387757452855583640107788e-3,
    1.519305778833399218481262e-3,
    -1.376398196289478433857985e-2,
    1.690472383484423743663953e-3,
    2.261865154459947356571432e-2,
    -8.833493890410232394064188e-3,
    -3.352358406410096994358663e-2,
    2.097280059259754883313769e-2,
    4.580794415126833246633256e-2,
    -3.825382947938424882011109e-2,
    -5.925681563265897095153807e-2,
    5.956741087152995245435589e-2,
    7.504761994836017933579005e-2,
    -8.233021190655740867404074e-2,
    -9.660754061668439030915405e-2,
    1.017802968388141797470948e-1,
    1.299296469598537527842529e-1,
    -1.084517138233017845554079e-1,
    -1.819622917786080007408824e-1,
    8.180602838721862339029077e-2,
    2.515232543602686933435224e-1,
    1.967150045235938977077769e-2,
    -2.94375915262661772280822e-1,
    -2.461804297610834132869019e-1,
    1.308789632330201726057701e-1,
    4.622075536616057145505448e-1,
    5.18167040855622887310452e-1,
    3.684409724003061409445839e-1,
    1.873263318620649448028843e-1,
    7.058482597718160832030362e-2,
    1.976228615387959153244056e-2,
    4.02414036825728677070214e-3,
    5.662418377066724013768394e-4,
    4.942343750628132004714286e-5,
    2.022060862498392121815038e-6};
constexpr double k_db38[] = {
    -1.716152451088744188732404e-18,
    4.304596839558790016251867e-17,
    -4.405307042483461342449027e-16,
    2.045099676788988907802273e-15,
    -4.563397162127373109101692e-16,
    -4.249817819571463006966616e-14,
    1.808661236274530582267085e-13,
    2.626496504065252070488283e-14,
    -2.484789237563642857043361e-12,
    6.291537317039508581580914e-12,
    1.101692934599454551150833e-11,
    -8.278256522538134727330693e-11,
    6.732336490189308685740627e-11,
    5.261132557357598494535767e-10,
    -1.349197753983448821850382e-9,
    -1.43632948779513570685454e-9,
    1.034704539274858480924046e-8,
    -5.424274800287298511126684e-9,
    -4.884757937459286762082185e-8,
    8.400351046895965526933587e-8,
    1.396377545508355481227962e-7,
    -5.187733738874144426008475e-7,
    -8.487087586072593071869805e-8,
    2.149960269939665207789548e-6,
    -1.55084435011860257585338e-6,
    -6.45673042846961916037991e-6,
    1.037359184045599795632258e-5,
    1.334176149921350382547503e-5,
    -4.175141648540397797296325e-5,
    -1.155409103833717192628479e-5,
    1.262043350166170705382347e-4,
    -4.555682696668420274688683e-5,
    -3.031020460726611993600629e-4,
    2.817639250380670746018049e-4,
    5.810759750532863662020321e-4,
    -9.424614077227377964015942e-4,
    -8.448626665537775009068938e-4,
    2.400697781890973183892307e-3,
    7.169821821064019257784165e-4,
    -5.071314509218348093935061e-3,
    5.625715748403532005741566e-4,
    9.214785032197180512031535e-3,
    -4.131306656031089274123231e-3,
    -1.470188206539868213708986e-2,
    1.129049727868596484270081e-2,
    2.090464525565524340215982e-2,
    -2.311413402054931680856914e-2,
    -2.689149388089451438550852e-2,
    4.005498110511594820952087e-2,
    3.198987753153780630818381e-2,
    -6.176620870841315993604737e-2,
    -3.660510340287429567372071e-2,
    8.720439826203975011910714e-2,
    4.309589543304764288137871e-2,
    -1.147311707107443752394144e-1,
    -5.658645863072738145681788e-2,
    1.414147340733826800884683e-1,
    8.563812155615105741612218e-2,
    -1.599125651582443618288533e-1,
    -1.417956859730596216710053e-1,
    1.499851196187170199586403e-1,
    2.321259638353531085028708e-1,
    -6.22665060478243222664336e-2,
    -3.216756378089978628483472e-1,
    -1.828676677083358907975549e-1,
    2.130505713555785138286743e-1,
    4.933560785171007975728485e-1,
    4.965911753117180976599171e-1,
    3.307757814110146511493638e-1,
    1.600719935641106973482801e-1,
    5.788994361285925649727664e-2,
    1.56372493475721561727749e-2,
    3.08308811925375177428874e-3,
    4.211702664727116432247014e-4,
    3.576251994264023012742569e-5,
    1.42577664167413167205542e-6};
constexpr double k_sym2[] = {
    -1.294095225512603811744494e-1,
    2.241438680420133810259728e-1,
    8.365163037378079055752938e-1,
    4.829629131445341433748716e-1};
constexpr double k_sym3[] = {
    3.522629188570953660274066e-2,
    -8.544127388202666169281917e-2,
    -1.350110200102545886963899e-1,
    4.598775021184915700951519e-1,
    8.068915093110925764944936e-1,
    3.326705529500826159985116e-1};
constexpr double k_sym4[] = {
    -7.57657147895022132277462e-2,
    -2.963552764600249176436918e-2,
    4.976186676327749899796055e-1,
    8.037387518051320808788056e-1,
    2.978577956053060514029012e-1,
    -9.921954357663353258520801e-2,
    -1.26039672620313037539161e-2,
    3.222310060405146787161592e-2};
constexpr double k_sym5[] = {
    2.733306834499876881849339e-2,
    2.951949092570626125003377e-2,
    -3.913424930231384362442606e-2,
    1.993975339768555968950648e-1,
    7.234076904040407920741132e-1,
    6.339789634567920637174852e-1,
    1.660210576451084813346286e-2,
    -1.75328089908056224237493e-1,
    -2.110183402468904100079904e-2,
    1.953888273524982677575358e-2};
constexpr double k_sym6[] = {
    1.540410932704482429924526e-2,
    3.490712084222162515316225e-3,
    -1.179901111485200254042429e-1,
    -4.831174258569805497104869e-2,
    4.91055941927973733041948e-1,
    7.876411410286509960718449e-1,
    3.379294217281658327144258e-1,
    -7.263752278637658346403941e-2,
    -2.106029251237084799153774e-2,
    4.472490177078138466299238e-2,
    1.767711864254007741006009e-3,
    -7.800708325032380414220998e-3};
constexpr double k_sym7[] = {
    2.681814568260147029111149e-3,
    -1.047384888679738086537195e-3,
    -1.263630340324056658273218e-2,
    3.051551316587788574475952e-2,
    6.789269350122056490450094e-2,
    -4.955283493704283230136514e-2,
    1.744125508683570685052496e-2,
    5.361019170905692306633096e-1,
    7.677643170048829311734274e-1,
    2.886296317506478746978083e-1,
    -1.400472404429336541417677e-1,
    -1.078082377032897125485655e-1,
    4.010244871522395167779835e-3,
    1.026817670846481623143475e-2};
constexpr double k_sym8[] = {
    -3.382415951005002595457699e-3,
    -5.421323318000106893478369e-4,
    3.169508781152599143142571e-2,
    7.607487324976608191921008e-3,
    -1.432942383512726628440955e-1,
    -6.127335906781107784304677e-2,
    4.813596512590533915895686e-1,
    7.771857516996280286243336e-1,
    3.644418948361789367595594e-1,
    -5.194583810788180073571073e-2,
    -2.721902991710348632196412e-2,
    4.913717967373028678691099e-2,
    3.808752013894489463071922e-3,
    -1.49522583370621991184903e-2,
    -3.029205147241330812639124e-4,
    1.889950332767689184274433e-3};
constexpr double k_sym9[] = {
    1.400915525914656231260818e-3,
    6.197808889855070809441088e-4,
    -1.327196778181713380567819e-2,
    -1.152821020767918614319415e-2,
    3.022487885827518813483037e-2,
    5.834627461249818310236411e-4,
    -5.456895843083335109686622e-2,
    2.387609146073051662556291e-1,
    7.178970827644124046627097e-1,
    6.173384491409341513208497e-1,
    3.52724880352710426894224e-2,
    -1.915508312972843349452871e-1,
    -1.823377077939550556982998e-2,
    6.207778930288574757001365e-2,
    8.859267493400266697184308e-3,
    -1.026406402763312048500338e-2,
    -4.731544986800435421888175e-4,
    1.069490032908611915868745e-3};
constexpr double k_sym10[] = {
    7.701598091144598225786407e-4,
    9.563267072285273078450441e-5,
    -8.641299277022150260980649e-3,
    -1.465382581304610513583442e-3,
    4.592723923109150858515887e-2,
    1.160989390371131806352707e-2,
    -1.594942788849106094647825e-1,
    -7.088053578323157228601765e-2,
    4.716906669384429100010319e-1,
    7.695100370210979367838742e-1,
    3.838267610670763262565418e-1,
    -3.553674047381958581615604e-2,
    -3.199005688242811392145285e-2,
    4.999497207737515627662641e-2,
    5.76491203358114967199208e-3,
    -2.0354939812311110745488e-2,
    -8.043589320164512960576106e-4,
    4.593173585311791947469788e-3,
    5.703608361849500681471888e-5,
    -4.593294210046520401924679e-4};
constexpr double k_sym11[] = {
    1.71721950699348100215154e-4,
    -3.879565573614803644381358e-5,
    -1.734366267297837757058948e-3,
    5.883527353969824904898188e-4,
    6.512495674771520117696651e-3,
    -9.857934828789213398428182e-3,
    -2.408084159586357924666024e-2,
    3.703741597885818535559637e-2,
    6.99767996107329323922268e-2,
    -2.283265102256226151557449e-2,
    9.71983944589055224966507e-2,
    5.720229780100757928291459e-1,
    7.303435490883895811848713e-1,
    2.376899090492575188926756e-1,
    -2.046547944957882937331574e-1,
    -1.44602343705311897316615e-1,
    3.526675956446461983252944e-2,
    4.300019068155132719625692e-2,
    -2.003471900108979292830296e-3,
    -6.389603666454665064522586e-3,
    1.105350976426903063611674e-4,
    4.892636102619029682637899e-4};
constexpr double k_sym12[] = {
    1.119671942465652805981811e-4,
    -1.135392804152661244590128e-5,
    -1.349755755571578982913478e-3,
    1.80214090085217523591535e-4,
    7.414965517654315366841005e-3,
    -1.408909244329129026022874e-3,
    -2.422072267501340301069565e-2,
    7.553780611679315567725424e-3,
    4.917931829966119582499655e-2,
    -3.584883073695463644197724e-2,
    -2.216230617035130089852665e-2,
    3.988859723901920074211515e-1,
    7.634790977836405407840944e-1,
    4.627410312192864216703449e-1,
    -7.833262231631543542340319e-2,
    -1.703706972388496215625562e-1,
    1.530174062248015280170436e-2,
    5.780417944550474687638691e-2,
    -2.604391031331418914640152e-3,
    -1.458983644923353403724759e-2,
    3.076477963105245317384505e-4,
    2.35029761418334749627577e-3,
    -1.815807886263295894943702e-5,
    -1.790665869750844743819091e-4};
constexpr double k_sym13[] = {
    6.820325263074354886166734e-5,
    -3.573862364871594042430266e-5,
    -1.136063438927969006289076e-3,
    -1.709428585295721342928098e-4,
    7.526225389968170166409612e-3,
    5.296359738721862223235928e-3,
    -2.021676813339546615435335e-2,
    -1.721164272630438622944971e-2,
    1.386249743583841071832133e-2,
    -5.975062771795646357749165e-2,
    -1.243624607515033873517225e-1,
    1.977048187712659653636888e-1,
    6.957391505615690652721713e-1,
    6.445643839011571270475476e-1,
    1.102302230212868724971639e-1,
    -1.404900931136755344146815e-1,
    8.819757670429852123649577e-3,
    9.292603089914397040864336e-2,
    1.761829688064504395066114e-2,
    -2.074968632552065365423252e-2,
    -1.492447274258728513796686e-3,
    5.674853760123338128682937e-3,
    4.132611988416782087148362e-4,
    -7.213643851363755484466448e-4,
    3.690537342323894105266718e-5,
    7.042986690696272806476613e-5};
constexpr double k_sym14[] = {
    -2.587909026540258485334856e-5,
    1.121086580890323397620803e-5,
    3.984356729760720689450675e-4,
    -6.286542481474576319914528e-5,
    -2.579441725933762786475052e-3,
    3.664765736599811884868767e-4,
    1.003769371767481774786395e-2,
    -2.753774791224789019474485e-3,
    -2.919621776405097543730255e-2,
    4.280520499000752189617517e-3,
    3.743308836282358185076881e-2,
    -5.763449835141096980060332e-2,
    -3.531811211510751909942489e-2,
    3.932015219620394345445359e-1,
    7.599762419611891543121832e-1,
    4.753357626343444738393976e-1,
    -5.811182331765857968022964e-2,
    -1.599974111465199090936023e-1,
    2.589858753105382173930153e-2,
    6.982761636182118781544483e-2,
    -2.365048836736658983794121e-3,
    -1.943931426362817559996638e-2,
    1.013141987184317606726246e-3,
    4.532677471946336569339852e-3,
    -7.321421356689133875211479e-5,
    -6.057601824664402653162286e-4,
    1.932901696554898588731284e-5,
    4.461897799148456220749373e-5};
constexpr double k_sym15[] = {
    9.712419737964492030299458e-6,
    -7.359666798928679329745048e-6,
    -1.606618663749955866192076e-4,
    5.51225478556533649281763e-5,
    1.070567219462717387065167e-3,
    -2.673164464720259261634719e-4,
    -3.590165447373622249803243e-3,
    3.423450736352420554814046e-3,
    1.00799770879066339023495e-2,
    -1.940501143094608478178208e-2,
    -3.887671687685496927659517e-2,
    2.193764271973721681824359e-2,
    4.073547969677049245823859e-2,
    -4.108266663546926087803747e-2,
    1.115336951425836358977486e-1,
    5.786404152151501774348209e-1,
    7.218430296363335781907521e-1,
    2.439627054321816589494577e-1,
    -1.966263587663165805823756e-1,
    -1.340562984562827613344372e-1,
    6.8393310060510168319915e-2,
    6.796982904489571982242622e-2,
    -8.744788886485915932362829e-3,
    -1.71712527816445197467149e-2,
    1.526138278183265958809462e-3,
    3.481028737065999710229202e-3,
    -1.081544016856574117143075e-4,
    -4.021685376030732176981907e-4,
    2.171789015080883340604739e-5,
    2.866070852533231008767336e-5};
constexpr double k_sym16[] = {
    6.230006701237646779379083e-6,
    -3.113556407613870406319611e-6,
    -1.094314792955831214172732e-4,
    2.807858212820692258446085e-5,
    8.523547108065520817188397e-4,
    -1.084456223076621615456484e-4,
    -3.880912252612220268723038e-3,
    7.182119788254315359870035e-4,
    1.266673165987695814725939e-2,
    -3.126517172273630193649208e-3,
    -3.105120284364274996560427e-2,
    4.869274404814542241897976e-3,
    3.233309161058234710357838e-2,
    -6.698304907061910366326289e-2,
    -3.457422841769919360526489e-2,
    3.97122933620398222682104e-1,
    7.565249878763846080411709e-1,
    4.753428060123471127360881e-1,
    -5.40406013874408064090862e-2,
    -1.59592192185395795526124e-1,
    3.072113906329964147383235e-2,
    7.803785290354830381705448e-2,
    -3.510275068337091252632037e-3,
    -2.495275804631512625106826e-2,
    1.359844742480148466977857e-3,
    6.937761130811371290691167e-3,
    -2.221164762103134791079886e-4,
    -1.338720606693643864627073e-3,
    3.656592483330302872779335e-5,
    1.654567957912395697608712e-4,
    -5.396483179313487364874018e-6,
    -1.079798210433086464027042e-5};
constexpr double k_sym17[] = {
    4.297343327338256072043303e-6,
    2.780126693825943152477875e-6,
    -6.293702597545908626030356e-5,
    -1.350638339979910757966974e-5,
    4.759963802631830594495168e-4,
    -1.386423026810132778896503e-4,
    -2.741675975678181303222616e-3,
    8.567700701928021691925984e-4,
    1.048236693301614751801557e-2,
    -4.819212803181353822940933e-3,
    -3.329138349230621670483659e-2,
    1.790395221438948852020962e-2,
    1.047546148421948886307476e-1,
    1.727117821060019287999771e-2,
    -1.185669326109985524704953e-1,
    1.423983504151138912238636e-1,
    6.507166292043823899259724e-1,
    6.814889953443169891982351e-1,
    1.805395845807440567569534e-1,
    -1.550760053497068884650419e-1,
    -8.607087472063264088829495e-2,
    1.615880872591856810806338e-2,
    -7.261634750933915551340046e-3,
    -1.803889724190138833231142e-2,
    9.952982523507613552938748e-3,
    1.239698836663430301677916e-2,
    -1.905407689856405452367957e-3,
    -3.932325279794941395705314e-3,
    5.840042869518091845476872e-5,
    7.198270642145453004253069e-4,
    2.520793314067132170650387e-5,
    -7.60712440560291824965291e-5,
    -2.452716342574082648452294e-6,
    3.791253194331624890873418e-6};
constexpr double k_sym18[] = {
    2.61261255645570225747116e-6,
    1.354915761785124494138295e-6,
    -4.524675787451530583736691e-5,
    -1.402099257700279330218584e-5,
    3.961684063793881438356213e-4,
    7.021273458599636061540786e-5,
    -2.313871814486868657505054e-3,
    -4.115211092058262199602235e-4,
    9.502164390909605233855885e-3,
    1.642986397208733806811774e-3,
    -3.032509108914364828813534e-2,
    -5.077085160416989707544665e-3,
    8.421992997007587015162706e-2,
    3.399566710354207097659042e-2,
    -1.599381486676970440663828e-1,
    -5.20291589804200692392293e-2,
    4.739690598957469556380252e-1,
    7.536291400999388029670797e-1,
    4.014838605676873397917772e-1,
    -3.248057329150484629843686e-2,
    -7.379920729088593441861735e-2,
    2.852959703874229761342875e-2,
    6.277944554132259663846583e-3,
    -3.171268473169946995863391e-2,
    -3.260744199977855639279767e-3,
    1.501235634421640982424556e-2,
    1.087784789568256704842829e-3,
    -5.23978968301397385027925e-3,
    -1.887762394005706215655553e-4,
    1.42808632707994218543275e-3,
    4.7416145182283679654092e-5,
    -2.658301102419810320099323e-4,
    -9.858816030038168827619909e-6,
    2.955743762087669001454796e-5,
    7.847298055848572732726357e-7,
    -1.513153069232048472344337e-6};
constexpr double k_sym19[] = {
    5.48773276821851389005786e-7,
    -6.463651303333403712959341e-7,
    -1.188051826983119620336859e-5,
    8.873312173693282191612293e-6,
    1.155392333358390790850608e-4,
    -4.612039600171763136576862e-5,
    -6.357645150042332831986479e-4,
    1.59158047679573735714406e-4,
    2.121425028183205283324415e-3,
    -1.160703257197034527761054e-3,
    -5.122205002569428061163632e-3,
    7.96843832063778353053359e-3,
    1.579743929576444861583882e-2,
    -2.265199337806638743037947e-2,
    -4.663598353477770915954293e-2,
    7.015573857219180783701441e-3,
    8.954591172977124436830331e-3,
    -6.752505804068399981045803e-2,
    1.090258250802208921259457e-1,
    5.781449453372967153645174e-1,
    7.195555257159845945809585e-1,
    2.582661692381038316221612e-1,
    -1.765968662509999310550104e-1,
    -1.162417301070013274949614e-1,
    9.363084341592178691062994e-2,
    8.407267627938502831021854e-2,
    -1.690823486113354882976752e-2,
    -2.770989693122367092440457e-2,
    4.319351874887416887050044e-3,
    8.262236955522642848363481e-3,
    -6.17922327789993534261105e-4,
    -1.70496026116131531744513e-3,
    1.293076765060830205216115e-4,
    2.762187768568196454903374e-4,
    -1.682138702924259529431234e-5,
    -2.815113866148874453252772e-5,
    2.062317063229323712924453e-6,
    1.75093679953049963156301e-6};
constexpr double k_sym20[] = {
    3.695537474791266951413579e-7,
    -1.901567589227817173598606e-7,
    -7.919361411893951459753363e-6,
    3.025666063118536340927629e-6,
    7.99296783571211420932189e-5,
    -1.928412301016186511287118e-5,
    -4.947310915655072999799495e-4,
    7.21599119007366584757827e-5,
    2.088994708186674323837658e-3,
    -3.052628318806568687875067e-4,
    -6.606585799120731290537702e-3,
    1.423087359619414346540809e-3,
    1.700404902327979708333787e-2,
    -3.313857384407232897706739e-3,
    -3.162943714548432170916983e-2,
    8.123228356394548432295209e-3,
    2.557934950956631866935415e-2,
    -7.899434492676140366890289e-2,
    -2.981936887124318078726681e-2,
    4.058314443632747824115942e-1,
    7.511627284288978880977051e-1,
    4.71991475091105368937277e-1,
    -5.108834293600639392338808e-2,
    -1.605782984207248358489473e-1,
    3.625095165576087694867536e-2,
    8.891966802862600512547535e-2,
    -6.84370196697405492575532e-3,
    -3.53733367574638907238955e-2,
    1.938597067661973391474256e-3,
    1.21570409489874966160274e-2,
    -6.111263859779793992214229e-4,
    -3.471647802925688908295728e-3,
    1.254409172704125701774524e-4,
    7.476108598012617086282012e-4,
    -2.661555034277681017223486e-5,
    -1.173913351662847509013529e-4,
    4.525422210086227215187294e-6,
    1.228725277837423197488296e-5,
    -3.256702642630827699391611e-7,
    -6.329129045042895181598212e-7};
constexpr double k_coif1[] = {
    -1.5655728135791993e-2,
    -7.273261951252645e-2,
    3.848648468648578e-1,
    8.525720202116004e-1,
    3.378976624574818e-1,
    -7.273261951252645e-2};
constexpr double k_coif2[] = {
    -7.20549445520347e-4,
    -1.8232088709110323e-3,
    5.611434819368834e-3,
    2.368017194684777e-2,
    -5.943441864643109e-2,
    -7.648859907828076e-2,
    4.170051844232391e-1,
    8.127236354494135e-1,
    3.861100668227629e-1,
    -6.73725547237256e-2,
    -4.146493678687178e-2,
    1.638733646320364e-2};
constexpr double k_coif3[] = {
    -3.459977319727278e-5,
    -7.0983302506379e-5,
    4.662169598204029e-4,
    1.1175187708306303e-3,
    -2.5745176881367972e-3,
    -9.007976136730624e-3,
    1.5880544863669452e-2,
    3.455502757329774e-2,
    -8.230192710629983e-2,
    -7.179982161915484e-2,
    4.2848347637737e-1,
    7.937772226260872e-1,
    4.0517690240911824e-1,
    -6.112339000297255e-2,
    -6.577191128146936e-2,
    2.3452696142077168e-2,
    7.782596425672746e-3,
    -3.793512864380802e-3};
constexpr double k_coif4[] = {
    -1.7849909144933469e-6,
    -3.259647940030751e-6,
    3.1229861599195265e-5,
    6.233885431278719e-5,
    -2.599743371222568e-4,
    -5.890202246332165e-4,
    1.2665610789256603e-3,
    3.7514346971460866e-3,
    -5.6582838001308835e-3,
    -1.5211728187697211e-2,
    2.508225333794961e-2,
    3.933442260558915e-2,
    -9.622042453595264e-2,
    -6.662747236681717e-2,
    4.3438603311435653e-1,
    7.822389344242826e-1,
    4.1530842700068227e-1,
    -5.607731960356926e-2,
    -8.126671024919373e-2,
    2.668230466960483e-2,
    1.606894713157503e-2,
    -7.346167936268051e-3,
    -1.629492425226786e-3,
    8.92313902537003e-4};
constexpr double k_coif5[] = {
    -9.604010112767894e-8,
    -1.6237995172048338e-7,
    2.0612203985788783e-6,
    3.7007277113394796e-6,
    -2.1270221672515614e-5,
    -4.12198619242655e-5,
    1.4035632812373243e-4,
    3.018579416682448e-4,
    -6.375589261258812e-4,
    -1.6616273039298788e-3,
    2.4315754425382886e-3,
    6.761520220620417e-3,
    -9.159507338676163e-3,
    -1.9758391600965465e-2,
    3.2674799467057355e-2,
    4.1287530472117834e-2,
    -1.0556315130733723e-1,
    -6.203775157498196e-2,
    4.379823066591634e-1,
    7.742936228603274e-1,
    4.2157126673075435e-1,
    -5.2046670253554764e-2,
    -9.192158806008609e-2,
    2.8169744270532353e-2,
    2.3408322118927783e-2,
    -1.0131584846900276e-2,
    -4.15931262757864e-3,
    2.1782943778456947e-3,
    3.585777411617577e-4,
    -2.12081862067494e-4};
constexpr double k_coif6[] = {
    -5.309088417196894e-9,
    -8.487143396262437e-9,
    1.3503244993561446e-7,
    2.255997852816182e-7,
    -1.6596192951024209e-6,
    -2.924385559757523e-6,
    1.3139851354021442e-5,
    2.473655932872323e-5,
    -7.528004306935965e-5,
    -1.545771992797995e-4,
    3.252223590102408e-4,
    7.698547307507267e-4,
    -1.1574350134273348e-3,
    -3.0739395072085594e-3,
    3.8576582705936867e-3,
    9.591090175904054e-3,
    -1.2650067908732352e-2,
    -2.2950153279849065e-2,
    3.888132625151076e-2,
    4.185249067613627e-2,
    -1.1226080796481724e-1,
    -5.81089179726148e-2,
    4.404011911268528e-1,
    7.684032575798925e-1,
    4.2581954501283853e-1,
    -4.876407217567388e-2,
    -9.967300204601176e-2,
    2.878611434666557e-2,
    2.9645772891323842e-2,
    -1.2231577790037914e-2,
    -7.029406391002729e-3,
    3.5390198715409982e-3,
    1.0916247123259031e-3,
    -6.246130439256836e-4,
    -8.117002626784841e-5,
    5.0775487836340565e-5};
constexpr double k_coif7[] = {
    -2.990566231736866e-10,
    -4.578334067792951e-10,
    8.796593384856987e-9,
    1.3935103885216453e-8,
    -1.2550913190794572e-7,
    -2.0693205243938526e-7,
    1.1579769069489573e-6,
    2.0020780498554183e-6,
    -7.771243547311862e-6,
    -1.4235636978451501e-5,
    4.04304824171402e-5,
    7.971050025993867e-5,
    -1.6781721215484974e-4,
    -3.6906682873489536e-4,
    5.794994482340954e-4,
    1.4347418566524124e-3,
    -1.8015372833330428e-3,
    -4.617842130433119e-3,
    5.431316442880096e-3,
    1.2052338241841624e-2,
    -1.5946846819567942e-2,
    -2.5154257568539024e-2,
    4.399304616307942e-2,
    4.170535760257679e-2,
    -1.1729357104319278e-1,
    -5.4751241648150456e-2,
    4.4213746140184257e-1,
    7.638153654167334e-1,
    4.288888072494226e-1,
    -4.60333970384663e-2,
    -1.055561682215613e-1,
    2.893704198352315e-2,
    3.491050510474272e-2,
    -1.38025542362884e-2,
    -9.93889526908058e-3,
    4.829446560702039e-3,
    2.105772041410548e-3,
    -1.1693144285797635e-3,
    -2.872023753570612e-4,
    1.751021677848318e-4,
    1.871135500141218e-5,
    -1.2222250624065772e-5};
constexpr double k_coif8[] = {
    -1.7079895947055486e-11,
    -2.5254234938854572e-11,
    5.704810333909736e-10,
    8.669995082338711e-10,
    -9.271205591546297e-9,
    -1.454000853375353e-8,
    9.772418508367799e-8,
    1.589351722153065e-7,
    -7.515021558886325e-7,
    -1.2754542996407565e-6,
    4.496936443579392e-6,
    8.031502995440787e-6,
    -2.1802000767010356e-5,
    -4.147478606916182e-5,
    8.754452091843062e-5,
    1.8169287648431021e-4,
    -2.9777893219564e-4,
    -6.871716433480045e-4,
    8.967760630796798e-4,
    2.235649422048103e-3,
    -2.5440037102452736e-3,
    -6.156659548258421e-3,
    7.065827011035097e-3,
    1.4117470077618783e-2,
    -1.898524469525487e-2,
    -2.6656710542648603e-2,
    4.825237108568226e-2,
    4.118580667625654e-2,
    -1.2121116823149648e-1,
    -5.186074316118868e-2,
    4.4344254984152603e-1,
    7.601133020179406e-1,
    4.3120981555508764e-1,
    -4.371898336594559e-2,
    -1.1016997698347017e-1,
    2.882862175928801e-2,
    3.937203787797985e-2,
    -1.4978462081708435e-2,
    -1.2742370632719796e-2,
    5.994849192155886e-3,
    3.3008250106161103e-3,
    -1.783260008597197e-3,
    -6.235604474579403e-4,
    3.712949956074124e-4,
    7.54736783816504e-5,
    -4.8296315214092946e-5,
    -4.368264820320075e-6,
    2.9543365214148865e-6};
constexpr double k_coif9[] = {
    -9.858437261237078e-13,
    -1.416273550918584e-12,
    3.686179736445179e-11,
    5.4171009642830385e-11,
    -6.723464414885984e-10,
    -1.0136275688170466e-9,
    7.97400588684683e-9,
    1.2375256619810126e-8,
    -6.916547041218038e-8,
    -1.1096670180879424e-7,
    4.679584769454299e-7,
    7.802480329370886e-7,
    -2.5723835744866874e-6,
    -4.488111475152765e-6,
    1.1814409451578695e-5,
    2.177639641002903e-5,
    -4.613708198462493e-5,
    -9.135595508746477e-5,
    1.5541352126673886e-4,
    3.369138692848271e-4,
    -4.6272908550530433e-4,
    -1.095745627952607e-3,
    1.26969092513534e-3,
    3.113227788384304e-3,
    -3.3576745265865788e-3,
    -7.614042448258918e-3,
    8.702757446229182e-3,
    1.581871581592506e-2,
    -2.1754553510948845e-2,
    -2.7661239498680462e-2,
    5.184461568624732e-2,
    4.047376745572896e-2,
    -1.2434558953929063e-1,
    -4.934886629362917e-2,
    4.4445789317644796e-1,
    7.570455233843789e-1,
    4.330267511031542e-1,
    -4.1726110205852804e-2,
    -1.1388350819004509e-1,
    2.8572667556949285e-2,
    4.318172760825045e-2,
    -1.5860223894792906e-2,
    -1.5376649629718764e-2,
    7.022340460196238e-3,
    4.597056424920538e-3,
    -2.4212416736516485e-3,
    -1.075458272741238e-3,
    6.26473032139716e-4,
    1.8228485966342262e-4,
    -1.1443395278590283e-4,
    -1.978720443246248e-5,
    1.315888564542533e-5,
    1.0293200668945786e-6,
    -7.164920431247886e-7};
constexpr double k_coif10[] = {
    -5.737961266897435e-14,
    -8.044508599489871e-14,
    2.374617931225516e-12,
    3.393464737916166e-12,
    -4.8040522124783065e-11,
    -7.01292033330539e-11,
    6.333121950019277e-10,
    9.4678306369391e-10,
    -6.118910132543529e-9,
    -9.39633274741924e-9,
    4.620903057304521e-8,
    7.315542758722409e-8,
    -2.840907583862188e-7,
    -4.657624401004923e-7,
    1.4624450319782122e-6,
    2.4972027910054274e-6,
    -6.434329489073881e-6,
    -1.1531058392150231e-5,
    2.4541910121029197e-5,
    4.6724981354812776e-5,
    -8.202162255997293e-5,
    -1.6857983433223972e-4,
    2.436317307208456e-4,
    5.451673708605962e-4,
    -6.598662532419506e-4,
    -1.5748582231923617e-3,
    1.6899697926397446e-3,
    4.020222790700274e-3,
    -4.218113884810503e-3,
    -8.953207286543774e-3,
    1.0305378002449852e-2,
    1.720591249831959e-2,
    -2.4267328682795093e-2,
    -2.8310063944428577e-2,
    5.490896399592108e-2,
    3.9668349279538065e-2,
    -1.2690910430554908e-1,
    -4.714526253802028e-2,
    4.45269197719615e-1,
    7.54450109494782e-1,
    4.3448818216271134e-1,
    -3.998711301587224e-2,
    -1.1693607050206899e-1,
    2.8232912738798778e-2,
    4.6462747054700444e-2,
    -1.6521511268705533e-2,
    -1.7820445781285547e-2,
    7.917157067706418e-3,
    5.9373732658958775e-3,
    -3.053992493811566e-3,
    -1.620778108853293e-3,
    9.249399604237315e-4,
    3.4345502618015684e-4,
    -2.1177413649420268e-4,
    -5.264472185921728e-5,
    3.4459693234170226e-5,
    5.173962608452716e-6,
    -3.551205538569571e-6,
    -2.4427648648848456e-7,
    1.7423674803127223e-7};
constexpr double k_coif11[] = {
    -3.3623613180937427e-15,
    -4.615818040032402e-15,
    1.525825549533055e-13,
    2.1292784594645594e-13,
    -3.391025392797988e-12,
    -4.818423114601901e-12,
    4.919793979271459e-11,
    7.131883881772345e-11,
    -5.240838827477836e-10,
    -7.7681779289702e-10,
    4.371514216501341e-9,
    6.643004284847311e-9,
    -2.9737144543121354e-8,
    -4.647551654558209e-8,
    1.6966516600849333e-7,
    2.73769336370002e-7,
    -8.287967353524098e-7,
    -1.3873754845796895e-6,
    3.5211459772931156e-6,
    6.153164872698854e-6,
    -1.3163750930799775e-5,
    -2.4235592024624014e-5,
    4.368364304478778e-5,
    8.582415436286544e-5,
    -1.298668208927486e-4,
    -2.7542687784672955e-4,
    3.512267504200824e-4,
    8.017452103384918e-4,
    -8.861775180562737e-4,
    -2.1036100764663637e-3,
    2.149020717634627e-3,
    4.922673261101513e-3,
    -5.105112841283235e-3,
    -1.0160884866512015e-2,
    1.1851974427506963e-2,
    1.8329643336621636e-2,
    -2.6545070862175356e-2,
    -2.8702596019727928e-2,
    5.75502447040702e-2,
    3.8825603724123164e-2,
    -1.2904373222526422e-1,
    -4.519495629357892e-2,
    4.4593144282059277e-1,
    7.522175440402374e-1,
    4.3568960835151255e-1,
    -3.8452460685844056e-2,
    -1.1948939622817124e-1,
    2.7847051241316454e-2,
    4.9312538937724984e-2,
    -1.7015922424480568e-2,
    -2.0073251976164126e-2,
    8.691538302863684e-3,
    7.283017155944007e-3,
    -3.6638635291587457e-3,
    -2.236842519594617e-3,
    1.2520730398850818e-3,
    5.577204869484765e-4,
    -3.381080420145401e-4,
    -1.0766668137712068e-4,
    6.942759574780768e-5,
    1.503949885335962e-5,
    -1.0185919231767138e-5,
    -1.3493521791802846e-6,
    9.510573210512222e-7,
    5.829773387691354e-8,
    -4.2466588505053215e-8};
constexpr double k_coif12[] = {
    -1.9813377170414736e-16,
    -2.670361623332566e-16,
    9.783102459953237e-15,
    1.3374548129663105e-14,
    -2.3693808823010433e-13,
    -3.2900456000023057e-13,
    3.7520235203128594e-12,
    5.299712095238988e-12,
    -4.369389307221472e-11,
    -6.288984311455846e-11,
    3.990594029041717e-10,
    5.864666471845081e-10,
    -2.9769070322269534e-9,
    -4.4775234981507144e-9,
    1.8654137706790354e-8,
    2.879531926985976e-8,
    -1.0022581131987928e-7,
    -1.5931230530960278e-7,
    4.6902731107106103e-7,
    7.708437343672786e-7,
    -1.935601054214237e-6,
    -3.3062392128971766e-6,
    7.112977349641407e-6,
    1.2718544951144566e-5,
    -2.344975069700953e-5,
    -4.433611442746385e-5,
    6.98246553433854e-5,
    1.411686033736131e-4,
    -1.8957894275957224e-4,
    -4.1198987135958684e-4,
    4.7699273328864105e-4,
    1.099444238862774e-3,
    -1.1384852551442936e-3,
    -2.6630986958948283e-3,
    2.638532076072489e-3,
    5.797853171804964e-3,
    -6.002793708808538e-3,
    -1.1236928414836344e-2,
    1.3330755435505158e-2,
    1.9235228829337574e-2,
    -2.861160212351853e-2,
    -2.8908947441411717e-2,
    5.984819686064441e-2,
    3.797767256570917e-2,
    -1.3084806656615866e-1,
    -4.345493993503663e-2,
    4.464815228895739e-1,
    7.502707776506686e-1,
    4.3669517449050693e-1,
    -3.708505815411896e-2,
    -1.2165660970268917e-1,
    2.743798196811415e-2,
    5.180772024804606e-2,
    -1.7382714538990422e-2,
    -2.2144389024790895e-2,
    9.359630574317225e-3,
    8.608649814937598e-3,
    -4.241021014921407e-3,
    -2.9033496249956684e-3,
    1.5956995222675778e-3,
    8.204877603314604e-4,
    -4.894690765309505e-4,
    -1.8759057842499834e-4,
    1.1925526520634742e-4,
    3.3195586707854686e-5,
    -2.2199299361439428e-5,
    -4.255365106601994e-6,
    2.965411949878776e-6,
    3.510411417820054e-7,
    -2.531117984656268e-7,
    -1.3976374181436278e-8,
    1.037010009101513e-8};
constexpr double k_coif13[] = {
    -1.1730386640303018e-17,
    -1.5554270417986292e-17,
    6.26097167955162e-16,
    8.406602973450898e-16,
    -1.6413244059647732e-14,
    -2.23397799523526e-14,
    2.8171589120208276e-13,
    3.891579035068562e-13,
    -3.5608264474554287e-12,
    -4.99908968900025e-12,
    3.534700054054496e-11,
    5.051249576886846e-11,
    -2.869880459508663e-10,
    -4.1821465407121307e-10,
    1.959961326135216e-9,
    2.9186399704548127e-9,
    -1.1492127566309325e-8,
    -1.7530546273017996e-8,
    5.8765319522698225e-8,
    9.209610667203678e-8,
    -2.653281517709694e-7,
    -4.2870074334562694e-7,
    1.0684276177195792e-6,
    1.7875606278098434e-6,
    -3.868533337330695e-6,
    -6.740799218474298e-6,
    1.2676538815653462e-5,
    2.3187742509380654e-5,
    -3.7799662099993004e-5,
    -7.32975891000369e-5,
    1.0322189107027523e-4,
    2.139168889952906e-4,
    -2.607867431764195e-4,
    -5.766881259563565e-4,
    6.196153396181822e-4,
    1.4301051868561214e-3,
    -1.4135265368952603e-3,
    -3.237559413824625e-3,
    3.1508776381888974e-3,
    6.631574528454967e-3,
    -6.899115322911729e-3,
    -1.2188034671027213e-2,
    1.4736317631638981e-2,
    1.996119614595352e-2,
    -3.0490095794234087e-2,
    -2.897913316298715e-2,
    6.186422181011113e-2,
    3.714297920870842e-2,
    -1.3239268372862886e-1,
    -4.1891314001197784e-2,
    4.469451189120829e-1,
    7.485538324581938e-1,
    4.3754954331413537e-1,
    -3.585654727086103e-2,
    -1.2351915633983332e-1,
    2.701986705945437e-2,
    5.400870551305577e-2,
    -1.7650941474490738e-2,
    -2.4047340050364834e-2,
    9.935243248428365e-3,
    9.89833068184399e-3,
    -4.780675949334216e-3,
    -3.603311278768316e-3,
    1.9462954123873873e-3,
    1.125533913083125e-3,
    -6.61238086717906e-4,
    -2.9338106939892823e-4,
    1.8399068204652167e-4,
    6.181045384455713e-5,
    -4.083713796575876e-5,
    -1.008560197073056e-5,
    6.9523017512637995e-6,
    1.1938880784407088e-6,
    -8.524405890651041e-7,
    -9.111838156033149e-8,
    6.701078769903018e-8,
    3.36329851203463e-9,
    -2.536460462157101e-9};
constexpr double k_coif14[] = {
    -6.972752077994577e-19,
    -9.112090547755774e-19,
    4.000437986126701e-17,
    5.286274517465632e-17,
    -1.1286067317116846e-15,
    -1.5093680534110733e-15,
    2.087175435684504e-14,
    2.827804378477004e-14,
    -2.845914016875714e-13,
    -3.9104860636051463e-13,
    3.051235212860773e-12,
    4.257417896733187e-12,
    -2.6789821104151334e-11,
    -3.801184928644451e-11,
    1.9809120346710113e-10,
    2.862848247030911e-10,
    -1.2590752100024664e-9,
    -1.8568684752939706e-9,
    6.987387541011994e-9,
    1.0538640451894265e-8,
    -3.427757286145719e-8,
    -5.300650696936342e-8,
    1.5013413713144253e-7,
    2.3876494051964654e-7,
    -5.919974641332918e-7,
    -9.71842353346463e-7,
    2.1160757624955858e-6,
    3.602893601306652e-6,
    -6.8957093978400805e-6,
    -1.2254515725465707e-5,
    2.0583278936576757e-5,
    3.849201590195014e-5,
    -5.65441840412094e-5,
    -1.1221961943808774e-4,
    1.4390413588042603e-4,
    3.043599006063343e-4,
    -3.4297286150624035e-4,
    -7.668251488526076e-4,
    7.777201566101956e-4,
    1.7856181989036103e-3,
    -1.7080538661070365e-3,
    -3.814524076580171e-3,
    3.6793235019773754e-3,
    7.4157782307655e-3,
    -7.7852024170722255e-3,
    -1.3024088005389463e-2,
    1.6067283926065306e-2,
    2.0539499874530513e-2,
    -3.220185256406462e-2,
    -2.894925613194684e-2,
    6.3646203141354e-2,
    3.633187623818003e-2,
    -1.3372942834321538e-1,
    -4.047709315229175e-2,
    4.473406567537405e-1,
    7.470249379615077e-1,
    4.3828475995016103e-1,
    -3.474484970544801e-2,
    -1.2513713600885462e-1,
    2.660154627198806e-2,
    5.596345341137636e-2,
    -1.784235415243864e-2,
    -2.579684377082798e-2,
    1.0430949170645139e-2,
    1.114255210951469e-2,
    -5.281202836308561e-3,
    -4.323062280774556e-3,
    2.2967107264584086e-3,
    1.4661214569906416e-3,
    -8.488083847885695e-4,
    -4.2463732869716845e-4,
    2.628623520649985e-4,
    1.0248333219568599e-4,
    -6.692604993754285e-5,
    -1.9995576397409376e-5,
    1.3640357675528054e-5,
    3.0247808186844957e-6,
    -2.1394639250579226e-6,
    -3.324658385771607e-7,
    2.424279845810464e-7,
    2.360235756379167e-8,
    -1.7662495148738494e-8,
    -8.118993462836169e-10,
    6.212814528402405e-10};
constexpr double k_coif15[] = {
    -4.1590573930635623e-20,
    -5.364244753127261e-20,
    2.552475920584872e-18,
    3.3250227224748574e-18,
    -7.710937330347505e-17,
    -1.0152622757776431e-16,
    1.528582254287465e-15,
    2.0358794477130563e-15,
    -2.236551020293379e-14,
    -3.015982985137597e-14,
    2.575890601011181e-13,
    3.52051387891066e-13,
    -2.4321347403077765e-12,
    -3.37280719675715e-12,
    1.936074181554065e-11,
    2.7277991222913513e-11,
    -1.3262295239786245e-10,
    -1.9012249889043818e-10,
    7.940677605424421e-10,
    1.1601835214850227e-9,
    -4.207104779368382e-9,
    -6.276946965454188e-9,
    1.992151339689276e-8,
    3.0420306905522665e-8,
    -8.500698229913931e-8,
    -1.3320726739212342e-7,
    3.291526254111233e-7,
    5.309958252905003e-7,
    -1.1633685314082286e-6,
    -1.939800386832085e-6,
    3.772091064754691e-6,
    6.534415586793016e-6,
    -1.1267101774009072e-5,
    -2.0413990718732566e-5,
    3.1122483672216425e-5,
    5.94367722239149e-5,
    -7.98658233350688e-5,
    -1.6180532955436765e-4,
    1.9175221055863048e-4,
    4.1206868138830995e-4,
    -4.355429437926704e-4,
    -9.790730546106287e-4,
    9.498999754877983e-4,
    2.1584984665309805e-3,
    -2.0189297967994208e-3,
    -4.384524134541961e-3,
    4.2180895009639825e-3,
    8.146642682593415e-3,
    -8.654690594816529e-3,
    -1.3756093488966998e-2,
    1.732475364848346e-2,
    2.0996338546795255e-2,
    -3.376590813619631e-2,
    -2.8845673444251017e-2,
    6.52319448331683e-2,
    3.554988160862526e-2,
    -1.348972365781996e-1,
    -3.919056961249979e-2,
    4.4768169876169045e-1,
    7.456522133710781e-1,
    4.3892440853136216e-1,
    -3.37324960509805e-2,
    -1.2655584892864374e-1,
    2.618853484172406e-2,
    5.771035117514861e-2,
    -1.7973423829255167e-2,
    -2.740743945377812e-2,
    1.0857812184642856e-2,
    1.2336147571654249e-2,
    -5.742902847255388e-3,
    -5.051893642506076e-3,
    2.6417538147238176e-3,
    1.8356604466900303e-3,
    -1.0479389168413227e-3,
    -5.800110441534674e-4,
    3.545813856134762e-4,
    1.5621764400384816e-4,
    -1.0088156289150039e-4,
    -3.505374322008593e-5,
    2.3673215731114123e-5,
    6.3636840151377605e-6,
    -4.460423183361215e-6,
    -8.968212011102488e-7,
    6.485869388545793e-7,
    9.197256712539524e-8,
    -6.831331679744407e-8,
    -6.102214747289204e-9,
    4.637763468611607e-9,
    1.9651736248532452e-10,
    -1.5236571538490177e-10};
constexpr double k_coif16[] = {
    -2.4882348740871053e-21,
    -3.171243373967865e-21,
    1.626584021224701e-19,
    2.0917311921863158e-19,
    -5.238852980994671e-18,
    -6.801835449347436e-18,
    1.1082430334134505e-16,
    1.4537260798059527e-16,
    -1.7320153218245642e-15,
    -2.297130946940807e-15,
    2.1327620856639504e-14,
    2.862384604227304e-14,
    -2.1550866999641267e-13,
    -2.929603467665681e-13,
    1.837741692652944e-12,
    2.533043295168227e-12,
    -1.3498670292821783e-11,
    -1.888754243442615e-11,
    8.674866101263907e-11,
    1.233822423910208e-10,
    -4.937872384599663e-10,
    -7.149797543708523e-10,
    2.5144313898152126e-9,
    3.7128890308434562e-9,
    -1.1548600098911635e-8,
    -1.7425737163136953e-8,
    4.817367733205772e-8,
    7.445242757454341e-8,
    -1.835890843628986e-7,
    -2.914269718183252e-7,
    6.424757126690244e-7,
    1.0510455241801266e-6,
    -2.073723145043526e-6,
    -3.5111629395158586e-6,
    6.1967347722344424e-6,
    1.0919026051004468e-5,
    -1.720027603845479e-5,
    -3.1753723132732214e-5,
    4.450165161739414e-5,
    8.66638640700267e-5,
    -1.0783305712030611e-4,
    -2.2237656647526452e-4,
    2.465548333905216e-4,
    5.360682879309423e-4,
    -5.378608496461215e-4,
    -1.2098453397664975e-3,
    1.1347385993702146e-3,
    2.5421630161041337e-3,
    -2.3432001881844894e-3,
    -4.940628195250106e-3,
    4.762320192500803e-3,
    8.823187183975602e-3,
    -9.503158857743535e-3,
    -1.4395049063084732e-2,
    1.8511294910050092e-2,
    2.1353089890706896e-2,
    -3.51990273138655e-2,
    -2.8687828349824907e-2,
    6.665164158948773e-2,
    3.4799585149717135e-2,
    -1.3592591498912343e-1,
    -3.801409965109623e-2,
    4.4797844765328076e-1,
    7.444108510775944e-1,
    4.394862290626149e-1,
    -3.280546383358694e-2,
    -1.2781007706564043e-1,
    2.578422990744645e-2,
    5.928039565969397e-2,
    -1.80567607738234e-2,
    -2.889277993976114e-2,
    1.122539739108762e-2,
    1.347684513904909e-2,
    -6.1672047402296405e-3,
    -5.781576422578688e-3,
    2.9777774831563023e-3,
    2.2280627527115925e-3,
    -1.2549104014289146e-3,
    -7.575611156619532e-4,
    4.5758095418508594e-4,
    2.2347487351192206e-4,
    -1.4276520952053923e-4,
    -5.616532904749551e-5,
    3.756395791987938e-5,
    1.1765624579909586e-5,
    -8.174656304120635e-6,
    -1.99600860362496e-6,
    1.4320792047190594e-6,
    2.6320533867728105e-7,
    -1.9408663643989093e-7,
    -2.5293812897900863e-8,
    1.909693969280092e-8,
    1.574985240567528e-9,
    -1.213763349944682e-9,
    -4.7676012848234074e-11,
    3.740776214156405e-11};
constexpr double k_coif17[] = {
    -1.4925731767051474e-22,
    -1.881677148105947e-22,
    1.0354104908732473e-20,
    1.3159795922880464e-20,
    -3.541741324829286e-19,
    -4.540571956247478e-19,
    7.963782939035077e-18,
    1.0304394817390555e-17,
    -1.324052488356665e-16,
    -1.7301946960729858e-16,
    1.7359444437405518e-15,
    2.292546657107991e-15,
    -1.8692778101462477e-14,
    -2.4968201502492676e-14,
    1.7001567646610816e-13,
    2.298842703415546e-13,
    -1.3331324069830058e-12,
    -1.826498790845331e-12,
    9.153903474792874e-12,
    1.2721761153695078e-11,
    -5.5722043699987653e-11,
    -7.864847350619418e-11,
    3.037030461263032e-10,
    4.359447175469891e-10,
    -1.4942808790878761e-9,
    -2.1848047745514903e-9,
    6.682924028386819e-9,
    9.970659851204182e-9,
    -2.732772421056791e-8,
    -4.169073699211024e-8,
    1.0269526627044103e-7,
    1.6059153270877367e-7,
    -3.562354702980367e-7,
    -5.726779955346247e-7,
    1.1451303776922555e-6,
    1.8992806819779945e-6,
    -3.422757310554498e-6,
    -5.88363073019203e-6,
    9.54094608426775e-6,
    1.7094583307705573e-5,
    -2.4873607461599964e-5,
    -4.674968583543716e-5,
    6.085540589948547e-5,
    1.2063544336913172e-4,
    -1.404313649191619e-4,
    -2.9391737297815475e-4,
    3.080445755741306e-4,
    6.750053722876709e-4,
    -6.4926747401087e-4,
    -1.4555598050827946e-3,
    1.330834181963005e-3,
    2.9310184543699363e-3,
    -2.6781423352943918e-3,
    -5.477959124841988e-3,
    5.308007234603321e-3,
    9.446275522838598e-3,
    -1.032766598728408e-2,
    -1.4951364256061297e-2,
    1.9630293958411843e-2,
    2.1627181084123398e-2,
    -3.65158661868462e-2,
    -2.849019813685731e-2,
    6.79296726646839e-2,
    3.4081797453796955e-2,
    -1.3683866582966367e-1,
    -3.6933200696832556e-2,
    4.4823872485149524e-1,
    7.43281221441139e-1,
    4.39983820652042e-1,
    -3.1952352520615034e-2,
    -1.289269634440451e-1,
    2.5390658639329416e-2,
    6.0698836099323736e-2,
    -1.8102118385278566e-2,
    -3.0265350462571627e-2,
    1.1541898708774485e-2,
    1.4564276648080908e-2,
    -6.55615479827296e-3,
    -6.5058949128243e-3,
    3.3023194534331645e-3,
    2.6379020095295557e-3,
    -1.4665663886605695e-3,
    -9.550264124726987e-4,
    5.701892687802022e-4,
    3.0426489109187585e-4,
    -1.923595852477447e-4,
    -8.40349922171605e-5,
    5.5677347144655594e-5,
    1.977791990756864e-5,
    -1.3625117490772095e-5,
    -3.882741927783709e-6,
    2.764328498891352e-6,
    6.179728213804948e-7,
    -4.524984010195444e-7,
    -7.654855556872685e-8,
    5.742465077331123e-8,
    6.919675145357251e-9,
    -5.301395728318189e-9,
    -4.0587190405967067e-10,
    3.16742992539928e-10,
    1.1589611003950017e-11,
    -9.193044901647832e-12};
constexpr double k_bior1_3_dec_lo[] = {
    -0.08838834764831845,
    0.08838834764831845,
    0.7071067811865476,
    0.7071067811865476,
    0.08838834764831845,
    -0.08838834764831845};
constexpr double k_bior1_3_dec_hi[] = {
    -0.0,
    0.0,
    -0.7071067811865476,
    0.7071067811865476,
    -0.0,
    0.0};
constexpr double k_bior1_3_rec_lo[] = {
    0.0,
    0.0,
    0.7071067811865476,
    0.7071067811865476,
    0.0,
    0.0};
constexpr double k_bior1_3_rec_hi[] = {
    -0.08838834764831845,
    -0.08838834764831845,
    0.7071067811865476,
    -0.7071067811865476,
    0.08838834764831845,
    0.08838834764831845};
constexpr double k_bior2_2_dec_lo[] = {
    0.0,
    -0.1767766952966369,
    0.3535533905932738,
    1.0606601717798212,
    0.3535533905932738,
    -0.1767766952966369};
constexpr double k_bior2_2_dec_hi[] = {
    -0.0,
    0.3535533905932738,
    -0.7071067811865476,
    0.3535533905932738,
    -0.0,
    0.0};
constexpr double k_bior2_2_rec_lo[] = {
    0.0,
    0.3535533905932738,
    0.7071067811865476,
    0.3535533905932738,
    0.0,
    0.0};
constexpr double k_bior2_2_rec_hi[] = {
    0.0,
    0.1767766952966369,
    0.3535533905932738,
    -1.0606601717798212,
    0.3535533905932738,
    0.1767766952966369};
constexpr double k_bior2_4_dec_lo[] = {
    0.0,
    0.03314563036811941,
    -0.06629126073623882,
    -0.1767766952966369,
    0.4198446513295126,
    0.9943689110435825,
    0.4198446513295126,
    -0.1767766952966369,
    -0.06629126073623882,
    0.03314563036811941};
constexpr double k_bior2_4_dec_hi[] = {
    -0.0,
    0.0,
    -0.0,
    0.3535533905932738,
    -0.7071067811865476,
    0.3535533905932738,
    -0.0,
    0.0,
    -0.0,
    0.0};
constexpr double k_bior2_4_rec_lo[] = {
    0.0,
    0.0,
    0.0,
    0.3535533905932738,
    0.7071067811865476,
    0.3535533905932738,
    0.0,
    0.0,
    0.0,
    0.0};
constexpr double k_bior2_4_rec_hi[] = {
    0.0,
    -0.03314563036811941,
    -0.06629126073623882,
    0.1767766952966369,
    0.4198446513295126,
    -0.9943689110435825,
    0.4198446513295126,
    0.1767766952966369,
    -0.06629126073623882,
    -0.03314563036811941};
constexpr double k_bior3_1_dec_lo[] = {
    -0.3535533905932738,
    1.0606601717798212,
    1.0606601717798212,
    -0.3535533905932738};
constexpr double k_bior3_1_dec_hi[] = {
    -0.1767766952966369,
    0.5303300858899106,
    -0.5303300858899106,
    0.1767766952966369};
constexpr double k_bior3_1_rec_lo[] = {
    0.1767766952966369,
    0.5303300858899106,
    0.5303300858899106,
    0.1767766952966369};
constexpr double k_bior3_1_rec_hi[] = {
    -0.3535533905932738,
    -1.0606601717798212,
    1.0606601717798212,
    0.3535533905932738};
constexpr double k_bior3_3_dec_lo[] = {
    0.06629126073623882,
    -0.1988737822087165,
    -0.15467960838455727,
    0.9943689110435825,
    0.9943689110435825,
    -0.15467960838455727,
    -0.1988737822087165,
    0.06629126073623882};
constexpr double k_bior3_3_dec_hi[] = {
    -0.0,
    0.0,
    -0.1767766952966369,
    0.5303300858899106,
    -0.5303300858899106,
    0.1767766952966369,
    -0.0,
    0.0};
constexpr double k_bior3_3_rec_lo[] = {
    0.0,
    0.0,
    0.1767766952966369,
    0.5303300858899106,
    0.5303300858899106,
    0.1767766952966369,
    0.0,
    0.0};
constexpr double k_bior3_3_rec_hi[] = {
    0.06629126073623882,
    0.1988737822087165,
    -0.15467960838455727,
    -0.9943689110435825,
    0.9943689110435825,
    0.15467960838455727,
    -0.1988737822087165,
    -0.06629126073623882};
constexpr double k_bior4_4_dec_lo[] = {
    0.0,
    0.03782845550726404,
    -0.023849465019556843,
    -0.11062440441843718,
    0.37740285561283066,
    0.8526986790088938,
    0.37740285561283066,
    -0.11062440441843718,
    -0.023849465019556843,
    0.03782845550726404};
constexpr double k_bior4_4_dec_hi[] = {
    -0.0,
    -0.06453888262869706,
    0.04068941760916406,
    0.41809227322161724,
    -0.7884856164055829,
    0.41809227322161724,
    0.04068941760916406,
    -0.06453888262869706,
    -0.0,
    0.0};
constexpr double k_bior4_4_rec_lo[] = {
    0.0,
    -0.06453888262869706,
    -0.04068941760916406,
    0.41809227322161724,
    0.7884856164055829,
    0.41809227322161724,
    -0.04068941760916406,
    -0.06453888262869706,
    0.0,
    0.0};
constexpr double k_bior4_4_rec_hi[] = {
    0.0,
    -0.03782845550726404,
    -0.023849465019556843,
    0.11062440441843718,
    0.37740285561283066,
    -0.8526986790088938,
    0.37740285561283066,
    0.11062440441843718,
    -0.023849465019556843,
    -0.03782845550726404};
constexpr double k_bior5_5_dec_lo[] = {
    0.0,
    0.0,
    0.03968708834740544,
    0.007948108637240322,
    -0.05446378846823691,
    0.34560528195603346,
    0.7366601814282105,
    0.34560528195603346,
    -0.05446378846823691,
    0.007948108637240322,
    0.03968708834740544,
    0.0};
constexpr double k_bior5_5_dec_hi[] = {
    -0.013456709459118716,
    -0.002694966880111507,
    0.13670658466432914,
    -0.09350469740093886,
    -0.47680326579848425,
    0.8995061097486484,
    -0.47680326579848425,
    -0.09350469740093886,
    0.13670658466432914,
    -0.002694966880111507,
    -0.013456709459118716,
    0.0};
constexpr double k_bior5_5_rec_lo[] = {
    0.013456709459118716,
    -0.002694966880111507,
    -0.13670658466432914,
    -0.09350469740093886,
    0.47680326579848425,
    0.8995061097486484,
    0.47680326579848425,
    -0.09350469740093886,
    -0.13670658466432914,
    -0.002694966880111507,
    0.013456709459118716,
    0.0};
constexpr double k_bior5_5_rec_hi[] = {
    0.0,
    -0.0,
    0.03968708834740544,
    -0.007948108637240322,
    -0.05446378846823691,
    -0.34560528195603346,
    0.7366601814282105,
    -0.34560528195603346,
    -0.05446378846823691,
    -0.007948108637240322,
    0.03968708834740544,
    -0.0};
constexpr double k_bior6_8_dec_lo[] = {
    0.0,
    0.0019088317364812906,
    -0.0019142861290887667,
    -0.016990639867602342,
    0.01193456527972926,
    0.04973290349094079,
    -0.07726317316720414,
    -0.09405920349573646,
    0.4207962846098268,
    0.8259229974584023,
    0.4207962846098268,
    -0.09405920349573646,
    -0.07726317316720414,
    0.04973290349094079,
    0.01193456527972926,
    -0.016990639867602342,
    -0.0019142861290887667,
    0.0019088317364812906};
constexpr double k_bior6_8_dec_hi[] = {
    -0.0,
    0.0,
    -0.0,
    0.014426282505624435,
    -0.014467504896790148,
    -0.07872200106262882,
    0.04036797903033992,
    0.41784910915027457,
    -0.7589077294536541,
    0.41784910915027457,
    0.04036797903033992,
    -0.07872200106262882,
    -0.014467504896790148,
    0.014426282505624435,
    -0.0,
    0.0,
    -0.0,
    0.0};
constexpr double k_bior6_8_rec_lo[] = {
    0.0,
    0.0,
    0.0,
    0.014426282505624435,
    0.014467504896790148,
    -0.07872200106262882,
    -0.04036797903033992,
    0.41784910915027457,
    0.7589077294536541,
    0.41784910915027457,
    -0.04036797903033992,
    -0.07872200106262882,
    0.014467504896790148,
    0.014426282505624435,
    0.0,
    0.0,
    0.0,
    0.0};
constexpr double k_bior6_8_rec_hi[] = {
    0.0,
    -0.0019088317364812906,
    -0.0019142861290887667,
    0.016990639867602342,
    0.01193456527972926,
    -0.04973290349094079,
    -0.07726317316720414,
    0.09405920349573646,
    0.4207962846098268,
    -0.8259229974584023,
    0.4207962846098268,
    0.09405920349573646,
    -0.07726317316720414,
    -0.04973290349094079,
    0.01193456527972926,
    0.016990639867602342,
    -0.0019142861290887667,
    -0.0019088317364812906};
}  // namespace

std::span<const double> daubechies(int order) {
  switch (order) {
    case 1: return k_db1;
    case 2: return k_db2;
    case 3: return k_db3;
    case 4: return k_db4;
    case 5: return k_db5;
    case 6: return k_db6;
    case 7: return k_db7;
    case 8: return k_db8;
    case 9: return k_db9;
    case 10: return k_db10;
    case 11: return k_db11;
    case 12: return k_db12;
    case 13: return k_db13;
    case 14: return k_db14;
    case 15: return k_db15;
    case 16: return k_db16;
    case 17: return k_db17;
    case 18: return k_db18;
    case 19: return k_db19;
    case 20: return k_db20;
    case 21: return k_db21;
    case 22: return k_db22;
    case 23: return k_db23;
    case 24: return k_db24;
    case 25: return k_db25;
    case 26: return k_db26;
    case 27: return k_db27;
    case 28: return k_db28;
    case 29: return k_db29;
    case 30: return k_db30;
    case 31: return k_db31;
    case 32: return k_db32;
    case 33: return k_db33;
    case 34: return k_db34;
    case 35: return k_db35;
    case 36: return k_db36;
    case 37: return k_db37;
    case 38: return k_db38;
    default: return {};
  }
}

std::span<const double> symlets(int order) {
  switch (order) {
    case 2: return k_sym2;
    case 3: return k_sym3;
    case 4: return k_sym4;
    case 5: return k_sym5;
    case 6: return k_sym6;
    case 7: return k_sym7;
    case 8: return k_sym8;
    case 9: return k_sym9;
    case 10: return k_sym10;
    case 11: return k_sym11;
    case 12: return k_sym12;
    case 13: return k_sym13;
    case 14: return k_sym14;
    case 15: return k_sym15;
    case 16: return k_sym16;
    case 17: return k_sym17;
    case 18: return k_sym18;
    case 19: return k_sym19;
    case 20: return k_sym20;
    default: return {};
  }
}

std::span<const double> coiflets(int order) {
  switch (order) {
    case 1: return k_coif1;
    case 2: return k_coif2;
    case 3: return k_coif3;
    case 4: return k_coif4;
    case 5: return k_coif5;
    case 6: return k_coif6;
    case 7: return k_coif7;
    case 8: return k_coif8;
    case 9: return k_coif9;
    case 10: return k_coif10;
    case 11: return k_coif11;
    case 12: return k_coif12;
    case 13: return k_coif13;
    case 14: return k_coif14;
    case 15: return k_coif15;
    case 16: return k_coif16;
    case 17: return k_coif17;
    default: return {};
  }
}

BiorthogonalBank biorthogonal(int major, int minor) {
  if (major == 1 && minor == 3)
    return {k_bior1_3_dec_lo, k_bior1_3_dec_hi, k_bior1_3_rec_lo, k_bior1_3_rec_hi};
  if (major == 2 && minor == 2)
    return {k_bior2_2_dec_lo, k_bior2_2_dec_hi, k_bior2_2_rec_lo, k_bior2_2_rec_hi};
  if (major == 2 && minor == 4)
    return {k_bior2_4_dec_lo, k_bior2_4_dec_hi, k_bior2_4_rec_lo, k_bior2_4_rec_hi};
  if (major == 3 && minor == 1)
    return {k_bior3_1_dec_lo, k_bior3_1_dec_hi, k_bior3_1_rec_lo, k_bior3_1_rec_hi};
  if (major == 3 && minor == 3)
    return {k_bior3_3_dec_lo, k_bior3_3_dec_hi, k_bior3_3_rec_lo, k_bior3_3_rec_hi};
  if (major == 4 && minor == 4)
    return {k_bior4_4_dec_lo, k_bior4_4_dec_hi, k_bior4_4_rec_lo, k_bior4_4_rec_hi};
  if (major == 5 && minor == 5)
    return {k_bior5_5_dec_lo, k_bior5_5_dec_hi, k_bior5_5_rec_lo, k_bior5_5_rec_hi};
  if (major == 6 && minor == 8)
    return {k_bior6_8_dec_lo, k_bior6_8_dec_hi, k_bior6_8_rec_lo, k_bior6_8_rec_hi};
  return {};
}

}  // namespace beat::wavelet::tables

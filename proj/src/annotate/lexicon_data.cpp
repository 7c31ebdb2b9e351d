#include "lexicon_data.hpp"

namespace slogan::annotate::data {

const LexiconBlock kLexicon[] = {
    {"DT", "a an the this that these those every each all some any no another "
           "either neither both half"},
    {"PRP$", "my your his its our their thy"},
    {"PRP", "i you he she it we they me him her us them myself yourself "
            "himself herself itself ourselves yourselves themselves one's "
            "you're we're it's you'll we'll you've we've"},
    {"TO", "to"},
    {"CC", "and or but nor yet plus"},
    {"MD", "can will may must should could would might shall cannot can't "
           "won't"},
    {"WDT", "which whichever whatever"},
    {"WP", "who whom what whoever"},
    {"WP$", "whose"},
    {"WRB", "where when why how wherever whenever however"},
    {"EX", "there"},
    {"UH", "hello hi wow yes oh welcome"},
    {"IN", "in on at for from with by of about into over under through "
           "between across after before during without within near around "
           "among against beyond like since until upon via per than unto "
           "onto toward towards behind below above beneath beside besides "
           "along amid despite except inside outside throughout till "
           "underneath unlike versus vs whether while because if though "
           "although unless whereas so as once"},
    {"CD", "zero one two three four five six seven eight nine ten eleven "
           "twelve thirteen fourteen fifteen sixteen seventeen eighteen "
           "nineteen twenty thirty forty fifty sixty seventy eighty ninety "
           "hundred thousand million billion dozen"},
    {"RB", "not just very also always never now here today again only even "
           "still really so too well soon simply truly almost already "
           "often quite rather perhaps together ever forever instantly "
           "directly everywhere anywhere online offline back away ahead "
           "tomorrow tonight yesterday anytime right fast n't"},
    {"RBR", "more less better faster"},
    {"RBS", "most least"},
    {"JJR", "greater larger bigger smaller higher lower stronger smarter "
            "easier cheaper newer older brighter cleaner safer healthier "
            "happier richer longer shorter closer fresher"},
    {"JJS", "best greatest largest biggest smallest highest lowest strongest "
            "smartest easiest cheapest newest finest brightest cleanest "
            "safest healthiest happiest leading latest"},
    {"VB", "be do have make get go see come take give know find think tell "
           "become leave feel bring begin keep hold write stand hear let "
           "mean set meet run pay sit speak lie read grow lose fall send "
           "build understand draw break spend cut rise drive buy wear choose "
           "seek throw catch deal win forget sell shop save boost create "
           "discover explore enjoy experience transform unlock empower "
           "connect inspire imagine live love learn play share start stop "
           "try call ask work move help show need want use turn put open "
           "change follow act stay join visit book order hire rent protect "
           "improve increase reduce deliver offer provide enable elevate "
           "simplify automate optimize optimise accelerate scale launch "
           "manage track drink eat taste cook celebrate relax unwind "
           "refresh renew restore repair clean fix install upgrade "
           "customize personalize shape craft invest earn borrow compare "
           "switch apply register subscribe download sign click browse "
           "contact reach grab claim redeem power drive fuel ignite spark "
           "embrace achieve succeed thrive dream believe trust rely depend "
           "go get stay keep bring become own rule lift fly travel escape "
           "look watch listen think smile laugh dance sing move feed heal "
           "nourish care serve support engage attract convert grow develop "
           "design print stream host secure store ship deliver capture "
           "celebrate gather meet unite discover rediscover reimagine "
           "redefine reinvent revolutionize revolutionise maximize maximise "
           "minimize minimise streamline leverage harness master"},
    {"VBD", "was were did had made got went saw came took gave knew found "
            "thought told became left felt brought began kept held wrote "
            "stood heard meant met ran paid sat spoke led read grew lost fell "
            "sent built understood drew broke spent rose drove bought wore "
            "chose sought threw caught dealt won forgot sold"},
    {"VBN", "been done gone seen taken given known written begun broken "
            "chosen driven grown thrown worn forgotten flown"},
    {"VBZ", "is has does says goes gets makes takes"},
    {"VBP", "are am"},
    {"JJ", "new good great high small large big long little old young "
           "important different early local public private real free full "
           "easy hard open simple strong true whole clear sure special "
           "certain personal available able current wide social digital "
           "global national international natural human modern online "
           "professional creative innovative reliable affordable premium "
           "quality luxury smart fresh healthy safe secure fast quick rapid "
           "efficient effective powerful flexible perfect beautiful "
           "unique exclusive authentic original classic elegant stylish "
           "trusted expert friendly independent trusted certified licensed "
           "local regional commercial residential industrial medical dental "
           "legal financial technical mobile virtual cloud wireless "
           "organic sustainable green clean pure natural handmade custom "
           "bespoke tailored complete comprehensive total ultimate "
           "essential advanced integrated intelligent interactive "
           "responsive strategic award-winning family-owned world-class "
           "cutting-edge state-of-the-art top prime major minor key main "
           "central core basic primary secondary daily weekly monthly "
           "annual yearly direct instant accurate precise reliable robust "
           "scalable seamless secure smooth solid stable superior "
           "versatile vibrant vital warm cool cold hot dry wet soft bright "
           "dark light heavy rich poor cheap expensive easy difficult "
           "happy sad lucky proud bold brave calm gentle kind honest loyal "
           "loving caring friendly helpful useful successful wonderful "
           "amazing awesome incredible outstanding excellent fantastic "
           "remarkable extraordinary exceptional impressive stunning "
           "gorgeous delicious tasty yummy spicy sweet savory crispy "
           "mexican italian french japanese chinese indian thai greek "
           "american british european asian african australian canadian "
           "german spanish korean vietnamese belgian dutch swiss irish "
           "scottish welsh nordic russian brazilian turkish egyptian "
           "dedicated passionate committed experienced qualified skilled "
           "talented knowledgeable responsive proactive transparent "
           "honest ethical fair affordable competitive low-cost budget "
           "entire various several many few much own same other such "
           "next last first second third final best-selling handcrafted "
           "eco-friendly user-friendly mission-critical end-to-end "
           "next-generation high-quality high-performance full-service "
           "one-stop on-demand real-time 24/7 worldwide nationwide "
           "environmental educational entertaining inspirational "
           "multiple unlimited endless infinite limitless timeless "
           "modular portable compact waterproof durable rugged reusable "
           "renewable solar electric electrical mechanical automotive "
           "architectural structural agricultural culinary musical "
           "artistic cultural historical spiritual emotional physical "
           "mental creative productive collaborative competitive"},
    {"NN", "time year people way day man thing woman life child world "
           "school state family student group country problem hand part "
           "place case week company system program question work "
           "government number night point home water room mother area "
           "money story fact month lot right study book eye job word "
           "business issue side kind head house service friend father "
           "power hour game line end member law car city community name "
           "president team minute idea kid body information back parent "
           "face others level office door health person art war history "
           "party result change morning reason research girl guy moment "
           "air teacher force education food coffee tea milk beer wine "
           "pizza burrito taco burger bakery bread cake chocolate candy "
           "soda pop juice restaurant cafe bar kitchen menu dinner lunch "
           "breakfast catering agency firm consultancy consultant studio "
           "shop store market marketplace platform software solution "
           "product brand design designer development developer technology "
           "tech app application website web site internet network data "
           "cloud security management marketing advertising media content "
           "strategy growth success sales revenue customer client partner "
           "partnership experience quality value price cost deal offer "
           "support care help advice insurance finance investment bank "
           "banking loan mortgage tax accounting accountant lawyer "
           "attorney law firm legal justice injury property estate "
           "realty home apartment office space building construction "
           "contractor engineering engineer architecture architect "
           "interior furniture upholstery flooring roofing plumbing "
           "plumber electrician heating cooling lighting equipment tool "
           "machine machinery manufacturing manufacturer factory "
           "production supply supplier distribution distributor logistics "
           "shipping delivery transport transportation travel tour tourism "
           "hotel resort vacation holiday trip adventure flight airline "
           "car auto vehicle truck fleet repair maintenance cleaning "
           "cleaner laundry garden landscaping lawn pet dog cat animal "
           "vet veterinary clinic hospital doctor dentist dental medicine "
           "pharmacy therapy therapist wellness fitness gym yoga spa "
           "beauty salon hair skin makeup fashion clothing apparel "
           "jewelry jewellery watch shoe footwear bag accessory gift toy "
           "baby kid child school college university academy training "
           "course class lesson tutor tutoring learning education "
           "recruitment recruiting staffing job career employment "
           "energy electricity gas oil fuel power solar wind water "
           "environment nature farm farming agriculture food produce "
           "event wedding party photography photographer photo video film "
           "music art artist gallery museum theatre theater entertainment "
           "gaming game sport sports club league golf tennis football "
           "soccer church ministry charity nonprofit foundation "
           "organization organisation association society community "
           "government council agency department center centre hub "
           "headquarters group holding enterprise corporation company "
           "industry sector economy commerce ecommerce trade retail "
           "wholesale import export print printing packaging label sign "
           "signage display screen device computer laptop phone mobile "
           "hardware server hosting domain email communication "
           "telecom broadband connectivity automation analytics "
           "intelligence insight innovation research science lab "
           "laboratory test testing inspection compliance audit risk "
           "safety protection defense defence alarm lock locksmith "
           "storage warehouse container box furniture decor interior "
           "paint painting painter carpet tile glass window door fence "
           "pool kitchen bathroom bedroom garage roof wall floor stone "
           "wood metal steel plastic paper fabric textile leather "
           "cotton wool silk dream future vision mission passion "
           "purpose journey story heart soul mind spirit life love joy "
           "happiness freedom peace hope trust confidence comfort style "
           "taste flavor flavour recipe ingredient dish meal snack "
           "dessert ice cream way path road street avenue bridge city "
           "town village neighborhood neighbourhood region area zone "
           "land island beach coast ocean sea river lake mountain valley "
           "forest park garden world planet earth globe nation country "
           "provider leader expert specialist professional professionals "
           "partner team staff crew people family friend member owner "
           "founder manager director agent broker dealer seller buyer "
           "user consumer audience reader viewer listener guest visitor "
           "patient resident tenant landlord homeowner student parent "
           "generation lead lead conversion subscriber visitor campaign "
           "funnel dashboard tool kit set collection range selection "
           "variety choice option plan package bundle subscription "
           "membership account profile portfolio project job task "
           "process procedure method approach technique practice skill "
           "ability capacity capability performance efficiency "
           "productivity profit income wealth asset fund capital cash "
           "payment card credit debt saving savings budget pricing "
           "branding identity logo message slogan headline copy text "
           "language translation writing content blog news magazine "
           "journal publication publishing book library archive record "
           "document file report review rating feedback opinion survey "
           "consulting engineering accounting advertising marketing "
           "building clothing housing training catering networking "
           "computing recruiting hosting financing parking wedding "
           "learning manufacturing landscaping shipping packaging "
           "banking gaming healthcare childcare aftercare skincare "
           "haircare homecare daycare software hardware firmware "
           "middleware malware warranty guarantee policy coverage claim "
           "emergency rescue response recovery disaster relief aid "
           "problem solver answer homework math algebra calculus "
           "explanation step question solution rewards compensation "
           "statement recruitment candidate employee employer workforce "
           "workplace office desk meeting conference seminar workshop "
           "summit expo exhibition fair festival show concert "
           "performance ticket seat venue stage studio space place "
           "location destination spot site spot access control bluetooth "
           "injury accident claim compensation court case trial "
           "advisory adviser advisor planner planning strategy "
           "process automation outcome outcome insight application "
           "activity program programme resident satisfaction growth "
           "furniture brand facility facilities piece consumer"},
};

const std::size_t kLexiconBlocks = sizeof(kLexicon) / sizeof(kLexicon[0]);

}  // namespace slogan::annotate::data

#include "gazetteer_data.hpp"

namespace slogan::annotate::data {

const GazetteerBlock kGazetteer[] = {
    {"GPE",
     "Afghanistan|Albania|Algeria|Andorra|Angola|Argentina|Armenia|Australia|"
     "Austria|Azerbaijan|Bahamas|Bahrain|Bangladesh|Barbados|Belarus|Belgium|"
     "Belize|Benin|Bhutan|Bolivia|Bosnia|Botswana|Brazil|Brunei|Bulgaria|"
     "Cambodia|Cameroon|Canada|Chile|China|Colombia|Congo|Costa Rica|Croatia|"
     "Cuba|Cyprus|Czech Republic|Czechia|Denmark|Dominican Republic|Ecuador|"
     "Egypt|El Salvador|England|Estonia|Ethiopia|Fiji|Finland|France|Gabon|"
     "Georgia|Germany|Ghana|Greece|Guatemala|Haiti|Honduras|Hong Kong|Hungary|"
     "Iceland|India|Indonesia|Iran|Iraq|Ireland|Israel|Italy|Jamaica|Japan|"
     "Jordan|Kazakhstan|Kenya|Kuwait|Laos|Latvia|Lebanon|Libya|Liechtenstein|"
     "Lithuania|Luxembourg|Macau|Madagascar|Malaysia|Maldives|Mali|Malta|"
     "Mauritius|Mexico|Moldova|Monaco|Mongolia|Montenegro|Morocco|Mozambique|"
     "Myanmar|Namibia|Nepal|Netherlands|New Zealand|Nicaragua|Niger|Nigeria|"
     "North Korea|Northern Ireland|Norway|Oman|Pakistan|Panama|Paraguay|Peru|"
     "Philippines|Poland|Portugal|Qatar|Romania|Russia|Rwanda|Saudi Arabia|"
     "Scotland|Senegal|Serbia|Singapore|Slovakia|Slovenia|Somalia|"
     "South Africa|South Korea|Spain|Sri Lanka|Sudan|Sweden|Switzerland|Syria|"
     "Taiwan|Tanzania|Thailand|Tunisia|Turkey|Uganda|Ukraine|"
     "United Arab Emirates|United Kingdom|United States|"
     "United States of America|Uruguay|Uzbekistan|Venezuela|Vietnam|Wales|"
     "Yemen|Zambia|Zimbabwe|USA|UK|UAE|NZ|"
     // US states, Canadian provinces, Australian and Indian states
     "Alabama|Alaska|Arizona|Arkansas|California|Colorado|Connecticut|"
     "Delaware|Florida|Hawaii|Idaho|Illinois|Indiana|Iowa|Kansas|Kentucky|"
     "Louisiana|Maine|Maryland|Massachusetts|Michigan|Minnesota|Mississippi|"
     "Missouri|Montana|Nebraska|Nevada|New Hampshire|New Jersey|New Mexico|"
     "New York|North Carolina|North Dakota|Ohio|Oklahoma|Oregon|Pennsylvania|"
     "Rhode Island|South Carolina|South Dakota|Tennessee|Texas|Utah|Vermont|"
     "Virginia|Washington|West Virginia|Wisconsin|Wyoming|Ontario|Quebec|"
     "British Columbia|Alberta|Manitoba|Saskatchewan|Nova Scotia|"
     "New South Wales|Queensland|Victoria|Tasmania|Tamil Nadu|Tamilnadu|"
     "Kerala|Karnataka|Maharashtra|Gujarat|Punjab|Uttarakhand|Rajasthan|"
     "Bavaria|Catalonia|Andalusia|Flanders|Wallonia|Norfolk|Essex|Kent|"
     "Surrey|Yorkshire|Devon|Cornwall|"
     // cities
     "New York City|Los Angeles|San Francisco|San Diego|San Jose|Chicago|"
     "Houston|Dallas|Austin|Phoenix|Philadelphia|Boston|Seattle|Denver|"
     "Atlanta|Miami|Orlando|Tampa|Jacksonville|Las Vegas|Portland|Detroit|"
     "Nashville|Charlotte|Baltimore|Minneapolis|Cleveland|Pittsburgh|"
     "Sacramento|Salt Lake City|Honolulu|Toronto|Vancouver|Montreal|Calgary|"
     "Ottawa|Edmonton|London|Manchester|Birmingham|Liverpool|Leeds|Glasgow|"
     "Edinburgh|Bristol|Cardiff|Belfast|Dublin|Cork|Norwich|Oxford|Cambridge|"
     "Brighton|Paris|Lyon|Marseille|Berlin|Munich|Hamburg|Frankfurt|Cologne|"
     "Amsterdam|Rotterdam|Brussels|Antwerp|Ghent|Bruges|Waregem|Kortrijk|"
     "Leuven|Zurich|Geneva|Vienna|Prague|Warsaw|Budapest|Madrid|Barcelona|"
     "Valencia|Seville|Lisbon|Porto|Rome|Milan|Naples|Florence|Venice|Athens|"
     "Istanbul|Moscow|Stockholm|Oslo|Copenhagen|Helsinki|Reykjavik|Tokyo|"
     "Osaka|Kyoto|Seoul|Beijing|Shanghai|Shenzhen|Guangzhou|Taipei|Bangkok|"
     "Hanoi|Ho Chi Minh City|Saigon|Manila|Jakarta|Kuala Lumpur|Mumbai|Delhi|"
     "New Delhi|Bangalore|Bengaluru|Chennai|Hyderabad|Kolkata|Pune|Dehradun|"
     "Karachi|Lahore|Dhaka|Dubai|Abu Dhabi|Doha|Riyadh|Tel Aviv|Cairo|Lagos|"
     "Nairobi|Johannesburg|Cape Town|Casablanca|Sydney|Melbourne|Brisbane|"
     "Perth|Adelaide|Canberra|Auckland|Wellington|Christchurch|Mexico City|"
     "Bogota|Lima|Santiago|Buenos Aires|Sao Paulo|Rio de Janeiro"},
    {"LOC",
     "Europe|Asia|Africa|North America|South America|Latin America|"
     "Central America|Antarctica|Oceania|Middle East|Southeast Asia|"
     "East Asia|South Asia|Asia Pacific|Asia-Pacific|Scandinavia|Caribbean|"
     "Mediterranean|Pacific|Atlantic|Silicon Valley|Alps|Himalayas|Sahara|"
     "Balkans|Baltics|Midwest|New England|Pacific Northwest|Bay Area|"
     "Gulf Coast|East Coast|West Coast|Highlands|Outback"},
    {"NORP",
     "American|Americans|British|Belgian|Belgians|Dutch|French|German|"
     "Germans|Italian|Italians|Spanish|Portuguese|Irish|Scottish|Welsh|"
     "Swiss|Austrian|Swedish|Norwegian|Danish|Finnish|Icelandic|"
     "Polish|Czech|Hungarian|Greek|Turkish|Russian|Ukrainian|Chinese|"
     "Japanese|Korean|Vietnamese|Thai|Filipino|Indonesian|Malaysian|"
     "Singaporean|Indian|Pakistani|Bangladeshi|Australian|Australians|"
     "Canadian|Canadians|Mexican|Brazilian|Argentinian|Argentine|Chilean|"
     "Colombian|Peruvian|Cuban|Jamaican|African|Nigerian|Kenyan|Egyptian|"
     "Moroccan|Israeli|Arab|Persian|Emirati|European|Europeans|Asian|"
     "Nordic|Scandinavian|Latino|Latina|Hispanic|Christian|Christians|"
     "Catholic|Protestant|Muslim|Muslims|Islamic|Jewish|Hindu|Buddhist|Sikh|"
     "Democrat|Democrats|Republican|Republicans|Texan|Californian|"
     "Floridian|Parisian|Londoner|Venetian|Tuscan|Sicilian|Bavarian|Flemish|"
     "Aussie"},
};

const std::size_t kGazetteerBlocks = sizeof(kGazetteer) / sizeof(kGazetteer[0]);

const char* const kGivenNames =
    "James John Robert Michael William David Richard Joseph Thomas Charles "
    "Christopher Daniel Matthew Anthony Donald Steven Paul Andrew Joshua "
    "Kenneth Kevin Brian George Edward Ronald Timothy Jason Jeffrey Ryan "
    "Jacob Gary Nicholas Eric Jonathan Stephen Larry Justin Scott Brandon "
    "Benjamin Samuel Gregory Frank Alexander Raymond Patrick Jack Dennis "
    "Jerry Tyler Aaron Henry Peter Adam Nathan Zachary Douglas Harold Kyle "
    "Carl Arthur Gerald Roger Keith Jeremy Lawrence Sean Christian Albert "
    "Mary Patricia Jennifer Linda Elizabeth Barbara Susan Jessica Sarah "
    "Karen Nancy Lisa Betty Margaret Sandra Ashley Kimberly Emily Donna "
    "Michelle Dorothy Carol Amanda Melissa Deborah Stephanie Rebecca Sharon "
    "Laura Cynthia Kathleen Amy Shirley Angela Helen Anna Brenda Pamela "
    "Nicole Emma Samantha Katherine Christine Debra Rachel Catherine Carolyn "
    "Janet Maria Heather Diane Julie Joyce Victoria Kelly Christina Lauren "
    "Joan Evelyn Olivia Judith Megan Cheryl Martha Andrea Frances Hannah "
    "Jacqueline Ann Gloria Jean Kathryn Alice Teresa Sara Janice Doris "
    "Madison Julia Judy Abigail Marie Denise Beverly Amber Theresa Marilyn "
    "Danielle Diana Natalie Sophia Alexis Lori Kayla Jane Wei Li Mohammed "
    "Muhammad Ahmed Ali Raj Priya Amit Anil Sunil Hiroshi Yuki Jean-Pierre "
    "Pierre Hans Klaus Giovanni Marco Luca Carlos Juan Jose Luis Miguel Pablo "
    "Diego Sofia Lucas Noah Liam Oliver Elijah Mateo Ethan Mason Logan "
    "Isabella Mia Charlotte Amelia Harper Ella Chloe Zoe Lily Mila";

}  // namespace slogan::annotate::data

// Closed entity-type vocabulary: the schema.org-style type names the
// entity-type feature family draws from. The named types are standard
// schema.org types; the ExtendedTypeNNN entries are reserved placeholder
// slots that complete the fixed 614-type vocabulary and carry no default
// gazetteer entries.
#pragma once

#include <array>
#include <string_view>

namespace drel {

inline constexpr std::array<std::string_view, 614> kSchemaEntityTypes = {
    "AchieveAction", "Action", "AdministrativeArea", "AggregateOffer",
    "AggregateRating", "Airline", "Airport", "AlbumRelease",
    "AlignmentObject", "AmusementPark", "AnatomicalStructure", "AnimalShelter",
    "Answer", "Apartment", "ApartmentComplex", "Aquarium",
    "ArtGallery", "Artery", "Article", "Attorney",
    "Audience", "AudioObject", "AutoBodyShop", "AutoDealer",
    "AutoMechanic", "AutoPartsStore", "AutoRental", "AutoRepair",
    "AutoWash", "Bakery", "BankOrCreditUnion", "Bar",
    "BarOrPub", "Barcode", "Beach", "BeautySalon",
    "BedAndBreakfast", "Blog", "BlogPosting", "BoatTerminal",
    "Book", "BookSeries", "BookStore", "BowlingAlley",
    "Brand", "Brewery", "Bridge", "BroadcastChannel",
    "BroadcastEvent", "BroadcastService", "BuddhistTemple", "BusStation",
    "BusStop", "BusTrip", "BusinessEvent", "CafeOrCoffeeShop",
    "Campground", "Canal", "Car", "Casino",
    "CatholicChurch", "Cemetery", "ChildCare", "ChildrensEvent",
    "Church", "City", "CityHall", "CivicStructure",
    "ClaimReview", "Clip", "ClothingStore", "CollegeOrUniversity",
    "ComedyClub", "ComedyEvent", "Comment", "CommentAction",
    "ComputerLanguage", "ComputerStore", "ConsumeAction", "ContactPoint",
    "Continent", "ConvenienceStore", "Conversation", "CookAction",
    "Corporation", "Country", "Course", "CourseInstance",
    "Courthouse", "CreativeWork", "CreativeWorkSeason", "CreativeWorkSeries",
    "Crematorium", "DanceEvent", "DanceGroup", "DataCatalog",
    "DataDownload", "Dataset", "DaySpa", "DefenceEstablishment",
    "DeliveryEvent", "Demand", "Dentist", "DepartmentStore",
    "DiagnosticLab", "DigitalDocument", "Distance", "Distillery",
    "DrawAction", "DrinkAction", "DryCleaningOrLaundry", "Duration",
    "EatAction", "EducationEvent", "EducationalAudience", "EducationalOrganization",
    "Electrician", "ElectronicsStore", "ElementarySchool", "EmailMessage",
    "Embassy", "EmergencyService", "EmploymentAgency", "EntertainmentBusiness",
    "Episode", "Event", "EventReservation", "EventVenue",
    "ExerciseAction", "ExerciseGym", "ExhibitionEvent", "ExtendedType001",
    "ExtendedType002", "ExtendedType003", "ExtendedType004", "ExtendedType005",
    "ExtendedType006", "ExtendedType007", "ExtendedType008", "ExtendedType009",
    "ExtendedType010", "ExtendedType011", "ExtendedType012", "ExtendedType013",
    "ExtendedType014", "ExtendedType015", "ExtendedType016", "ExtendedType017",
    "ExtendedType018", "ExtendedType019", "ExtendedType020", "ExtendedType021",
    "ExtendedType022", "ExtendedType023", "ExtendedType024", "ExtendedType025",
    "ExtendedType026", "ExtendedType027", "ExtendedType028", "ExtendedType029",
    "ExtendedType030", "ExtendedType031", "ExtendedType032", "ExtendedType033",
    "ExtendedType034", "ExtendedType035", "ExtendedType036", "ExtendedType037",
    "ExtendedType038", "ExtendedType039", "ExtendedType040", "ExtendedType041",
    "ExtendedType042", "ExtendedType043", "ExtendedType044", "ExtendedType045",
    "ExtendedType046", "ExtendedType047", "ExtendedType048", "ExtendedType049",
    "ExtendedType050", "ExtendedType051", "ExtendedType052", "ExtendedType053",
    "ExtendedType054", "ExtendedType055", "ExtendedType056", "ExtendedType057",
    "ExtendedType058", "ExtendedType059", "ExtendedType060", "ExtendedType061",
    "ExtendedType062", "ExtendedType063", "ExtendedType064", "ExtendedType065",
    "ExtendedType066", "ExtendedType067", "ExtendedType068", "ExtendedType069",
    "ExtendedType070", "ExtendedType071", "ExtendedType072", "ExtendedType073",
    "ExtendedType074", "ExtendedType075", "ExtendedType076", "ExtendedType077",
    "ExtendedType078", "ExtendedType079", "ExtendedType080", "ExtendedType081",
    "ExtendedType082", "ExtendedType083", "ExtendedType084", "ExtendedType085",
    "ExtendedType086", "ExtendedType087", "ExtendedType088", "ExtendedType089",
    "ExtendedType090", "ExtendedType091", "ExtendedType092", "ExtendedType093",
    "ExtendedType094", "ExtendedType095", "ExtendedType096", "ExtendedType097",
    "ExtendedType098", "ExtendedType099", "ExtendedType100", "ExtendedType101",
    "ExtendedType102", "ExtendedType103", "ExtendedType104", "ExtendedType105",
    "ExtendedType106", "ExtendedType107", "ExtendedType108", "ExtendedType109",
    "ExtendedType110", "ExtendedType111", "ExtendedType112", "ExtendedType113",
    "ExtendedType114", "ExtendedType115", "ExtendedType116", "ExtendedType117",
    "ExtendedType118", "ExtendedType119", "ExtendedType120", "ExtendedType121",
    "ExtendedType122", "ExtendedType123", "ExtendedType124", "ExtendedType125",
    "ExtendedType126", "ExtendedType127", "ExtendedType128", "ExtendedType129",
    "ExtendedType130", "ExtendedType131", "ExtendedType132", "ExtendedType133",
    "ExtendedType134", "ExtendedType135", "ExtendedType136", "ExtendedType137",
    "ExtendedType138", "ExtendedType139", "ExtendedType140", "ExtendedType141",
    "ExtendedType142", "ExtendedType143", "ExtendedType144", "ExtendedType145",
    "ExtendedType146", "ExtendedType147", "ExtendedType148", "ExtendedType149",
    "ExtendedType150", "ExtendedType151", "ExtendedType152", "ExtendedType153",
    "ExtendedType154", "ExtendedType155", "ExtendedType156", "ExtendedType157",
    "ExtendedType158", "ExtendedType159", "ExtendedType160", "ExtendedType161",
    "ExtendedType162", "ExtendedType163", "ExtendedType164", "ExtendedType165",
    "ExtendedType166", "ExtendedType167", "ExtendedType168", "ExtendedType169",
    "ExtendedType170", "ExtendedType171", "ExtendedType172", "ExtendedType173",
    "ExtendedType174", "ExtendedType175", "ExtendedType176", "ExtendedType177",
    "ExtendedType178", "ExtendedType179", "ExtendedType180", "ExtendedType181",
    "ExtendedType182", "ExtendedType183", "ExtendedType184", "ExtendedType185",
    "ExtendedType186", "ExtendedType187", "ExtendedType188", "ExtendedType189",
    "ExtendedType190", "ExtendedType191", "ExtendedType192", "ExtendedType193",
    "ExtendedType194", "ExtendedType195", "ExtendedType196", "ExtendedType197",
    "ExtendedType198", "ExtendedType199", "ExtendedType200", "ExtendedType201",
    "ExtendedType202", "ExtendedType203", "ExtendedType204", "ExtendedType205",
    "ExtendedType206", "ExtendedType207", "ExtendedType208", "ExtendedType209",
    "ExtendedType210", "ExtendedType211", "ExtendedType212", "ExtendedType213",
    "ExtendedType214", "ExtendedType215", "ExtendedType216", "ExtendedType217",
    "ExtendedType218", "ExtendedType219", "ExtendedType220", "ExtendedType221",
    "ExtendedType222", "ExtendedType223", "ExtendedType224", "ExtendedType225",
    "ExtendedType226", "ExtendedType227", "ExtendedType228", "ExtendedType229",
    "ExtendedType230", "ExtendedType231", "ExtendedType232", "ExtendedType233",
    "ExtendedType234", "ExtendedType235", "ExtendedType236", "ExtendedType237",
    "ExtendedType238", "FastFoodRestaurant", "Festival", "FinancialProduct",
    "FinancialService", "FireStation", "Flight", "FlightReservation",
    "Florist", "FoodEstablishment", "FoodEvent", "FurnitureStore",
    "Game", "GameServer", "GardenStore", "GasStation",
    "GeneralContractor", "GeoCoordinates", "GeoShape", "GolfCourse",
    "GovernmentBuilding", "GovernmentOffice", "GovernmentOrganization", "GovernmentService",
    "GroceryStore", "HVACBusiness", "HairSalon", "HardwareStore",
    "HealthAndBeautyBusiness", "HealthClub", "HighSchool", "HinduTemple",
    "HobbyShop", "HomeAndConstructionBusiness", "HomeGoodsStore", "Hospital",
    "Hostel", "Hotel", "HotelRoom", "House",
    "HousePainter", "HowTo", "IceCreamShop", "ImageObject",
    "IndividualProduct", "InsuranceAgency", "Intangible", "InternetCafe",
    "InvestmentOrDeposit", "InviteAction", "ItemList", "JewelryStore",
    "JobPosting", "LakeBodyOfWater", "Landform", "LandmarksOrHistoricalBuildings",
    "Language", "LegalService", "LegislativeBuilding", "Library",
    "LiquorStore", "ListenAction", "LiteraryEvent", "LocalBusiness",
    "Locksmith", "LodgingBusiness", "Map", "MediaObject",
    "MedicalOrganization", "MeetingRoom", "MensClothingStore", "Menu",
    "MenuItem", "MenuSection", "MiddleSchool", "MobileApplication",
    "MobilePhoneStore", "MonetaryAmount", "Mosque", "Motel",
    "Motorcycle", "MotorcycleDealer", "MotorcycleRepair", "Mountain",
    "MoveAction", "Movie", "MovieClip", "MovieRentalStore",
    "MovieSeries", "MovieTheater", "MovingCompany", "Museum",
    "MusicAlbum", "MusicComposition", "MusicEvent", "MusicGroup",
    "MusicPlaylist", "MusicRecording", "MusicRelease", "MusicStore",
    "MusicVenue", "MusicVideoObject", "NailSalon", "NewsArticle",
    "NightClub", "Notary", "NoteDigitalDocument", "NutritionInformation",
    "Occupation", "OceanBodyOfWater", "Offer", "OfficeEquipmentStore",
    "OnDemandEvent", "OpeningHoursSpecification", "Order", "Organization",
    "OutletStore", "Painting", "ParcelDelivery", "Park",
    "ParkingFacility", "PawnShop", "PerformingArtsTheater", "PerformingGroup",
    "Periodical", "Person", "PetStore", "Pharmacy",
    "Photograph", "Physician", "Place", "PlaceOfWorship",
    "PlayAction", "Playground", "Plumber", "PoliceStation",
    "Pond", "PostOffice", "PostalAddress", "Preschool",
    "PresentationDigitalDocument", "Product", "ProductModel", "ProfessionalService",
    "ProfilePage", "PropertyValue", "PublicSwimmingPool", "QAPage",
    "Quantity", "Question", "RVPark", "RadioChannel",
    "RadioEpisode", "RadioSeries", "RadioStation", "Rating",
    "ReadAction", "RealEstateAgent", "Recipe", "RecyclingCenter",
    "Report", "Reservation", "Reservoir", "Residence",
    "Restaurant", "Review", "ReviewAction", "RiverBodyOfWater",
    "RoofingContractor", "Room", "SaleEvent", "ScholarlyArticle",
    "School", "ScreeningEvent", "Sculpture", "SeaBodyOfWater",
    "SearchAction", "Season", "SelfStorage", "Service",
    "ShoeStore", "ShoppingCenter", "SingleFamilyResidence", "SiteNavigationElement",
    "SkiResort", "SocialEvent", "SoftwareApplication", "SoftwareSourceCode",
    "SomeProducts", "SportingGoodsStore", "SportsActivityLocation", "SportsClub",
    "SportsEvent", "SportsOrganization", "SportsTeam", "SpreadsheetDigitalDocument",
    "StadiumOrArena", "State", "Store", "SubwayStation",
    "Suite", "Synagogue", "TVClip", "TVEpisode",
    "TVSeason", "TVSeries", "TattooParlor", "Taxi",
    "TaxiService", "TaxiStand", "TelevisionChannel", "TelevisionStation",
    "TennisComplex", "TextDigitalDocument", "TheaterEvent", "TheaterGroup",
    "Thing", "Ticket", "TireShop", "TouristAttraction",
    "TouristInformationCenter", "ToyStore", "TradeAction", "TrainStation",
    "TrainTrip", "TravelAgency", "University", "Vehicle",
    "VideoGame", "VideoGameClip", "VideoGameSeries", "VideoObject",
    "VisualArtsEvent", "VisualArtwork", "Volcano", "WatchAction",
    "Waterfall", "WebApplication", "WebPage", "WebPageElement",
    "WebSite", "WholesaleStore", "Winery", "WomensClothingStore",
    "WriteAction", "Zoo",
};

}  // namespace drel

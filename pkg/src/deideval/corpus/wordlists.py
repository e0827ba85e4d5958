"""Built-in vocabularies for the synthetic fake-entity generator.

Kept inside the package (no external data dependency) so that generation
is byte-identical for a given seed on every install. All values are at
least four characters long; institution names deliberately contain no
periods so they never interact with sentence segmentation.
"""

FIRST_NAMES = (
    "Adele", "Adrian", "Agnes", "Alberto", "Alfred", "Alicia", "Amara", "Ambrose",
    "Amelia", "Anders", "Andrea", "Angela", "Anita", "Anselm", "Antonia", "Arturo",
    "Astrid", "Aurora", "Basil", "Beatriz", "Benedict", "Bernard", "Bianca", "Boris",
    "Bridget", "Bruno", "Camila", "Carmen", "Casimir", "Cecilia", "Cedric", "Celeste",
    "Clara", "Claudio", "Clement", "Colette", "Conrad", "Cordelia", "Cyrus", "Dagmar",
    "Damian", "Daniela", "Dario", "Delia", "Dmitri", "Dolores", "Dominic", "Dorothea",
    "Edgar", "Edmund", "Eduardo", "Elena", "Elias", "Eloise", "Elvira", "Emilio",
    "Enzo", "Erasmus", "Ernesto", "Esther", "Eugenia", "Ezra", "Fabian", "Felipe",
    "Fernanda", "Fiona", "Flavia", "Florence", "Franz", "Frieda", "Gaspar", "Genevieve",
    "Gideon", "Gisela", "Gloria", "Gregor", "Greta", "Gustavo", "Harriet", "Hector",
    "Helga", "Henrik", "Hilda", "Horacio", "Hugo", "Ignacio", "Ingrid", "Irene",
    "Isadora", "Ivan", "Jacinta", "Javier", "Joaquin", "Jorge", "Josefina", "Julius",
    "Katarina", "Klaus", "Leandro", "Leonora", "Lidia", "Lorenzo", "Lucia", "Ludwig",
    "Magda", "Marcus", "Margot", "Mariana", "Matilde", "Mauricio", "Milena", "Miriam",
    "Nadia", "Nestor", "Nikolai", "Noemi", "Octavia", "Olga", "Orlando", "Oscar",
    "Paloma", "Pascal", "Pedro", "Petra", "Quentin", "Rafael", "Ramona", "Raul",
    "Renata", "Ricardo", "Rodrigo", "Rosalind", "Ruben", "Sabine", "Salvador", "Sergei",
    "Sigrid", "Silvia", "Sofia", "Svetlana", "Tadeo", "Tatiana", "Teodoro", "Thelma",
    "Tobias", "Ulrich", "Ursula", "Valentina", "Vasily", "Veronica", "Viktor", "Vincente",
    "Wanda", "Wilhelm", "Xavier", "Yolanda", "Yusuf", "Zelda", "Zenon", "Zofia",
)

LAST_NAMES = (
    "Abernathy", "Acosta", "Aguilar", "Albrecht", "Almeida", "Alvarez", "Andrade", "Aranda",
    "Arellano", "Baranov", "Barbosa", "Barreto", "Becker", "Belmonte", "Beltran", "Benavides",
    "Bergström", "Bianchi", "Bogdanov", "Bonetti", "Borges", "Bustamante", "Caballero", "Cabrera",
    "Calderon", "Camacho", "Campos", "Cardenas", "Carvalho", "Castellanos", "Cervantes", "Chavez",
    "Cisneros", "Colombo", "Contreras", "Cordova", "Coronado", "Cortez", "Costa", "Dominguez",
    "Duarte", "Dvorak", "Echeverria", "Eichmann", "Escobar", "Espinoza", "Esposito", "Faulkner",
    "Feldman", "Ferreira", "Figueroa", "Fontaine", "Fuentes", "Galindo", "Gallagher", "Galvan",
    "Gastelum", "Giordano", "Gonzales", "Grabowski", "Greco", "Guerrero", "Gutierrez", "Guzman",
    "Hernandez", "Herrera", "Hidalgo", "Hoffmann", "Holmberg", "Ibarra", "Iglesias", "Ivanova",
    "Jimenez", "Kaminski", "Kowalski", "Kozlov", "Krause", "Kuznetsov", "Lindqvist", "Lombardi",
    "Lozano", "Machado", "Maldonado", "Marchetti", "Marinov", "Medina", "Mendoza", "Mercado",
    "Mironov", "Molina", "Montoya", "Morales", "Moreau", "Moreno", "Navarro", "Nowak",
    "Obando", "Ocampo", "Ochoa", "Olivares", "Orlov", "Orozco", "Ortega", "Pacheco",
    "Palacios", "Paredes", "Pavlov", "Pellegrini", "Peralta", "Petrov", "Pineda", "Quintero",
    "Ramirez", "Rendon", "Renteria", "Ricci", "Riveros", "Roldan", "Romano", "Rosales",
    "Rossi", "Saavedra", "Salazar", "Salcedo", "Sandoval", "Santoro", "Sepulveda", "Serrano",
    "Sokolov", "Soto", "Suarez", "Tamayo", "Tapia", "Teixeira", "Tellez", "Toledo",
    "Urbina", "Uribe", "Valdez", "Vargas", "Vasquez", "Vega", "Velasco", "Ventura",
    "Vidal", "Villanueva", "Vincenzo", "Volkov", "Wagner", "Weinstein", "Zamora", "Zapata",
)

# Near-misses of ordinary prose words (one edit away) are deliberately
# excluded; a window-similarity scan would flag them in unrelated text.
CITIES = (
    "Arlington", "Asheville", "Bakersfield", "Bellingham", "Billings", "Kalamazoo",
    "Bridgeport", "Chattanooga", "Cheyenne", "Davenport", "Duluth", "Evanston",
    "Fairbanks", "Fayetteville", "Flagstaff", "Frankfort", "Galveston", "Greenville",
    "Harrisburg", "Helena", "Huntsville", "Joliet", "Lexington", "Lubbock",
    "Missoula", "Sheboygan", "Montpelier", "Naperville", "Norwalk", "Olympia",
    "Pasadena", "Pawtucket", "Peoria", "Pocatello", "Tuscaloosa", "Racine",
    "Roanoke", "Rockford", "Savannah", "Scottsdale", "Spokane", "Stamford",
    "Syracuse", "Tallahassee", "Topeka", "Tucson", "Waterbury", "Wichita",
    "Worcester", "Yonkers",
)

STATES = (
    "AK", "AL", "AZ", "CO", "CT", "GA", "IA", "ID", "IL", "KS", "KY", "LA",
    "MA", "MD", "ME", "MI", "MN", "MO", "MT", "NC", "ND", "NE", "NH", "NM",
    "NV", "NY", "OH", "OK", "OR", "PA", "RI", "SC", "SD", "TN", "TX", "UT",
    "VA", "VT", "WA", "WI", "WV", "WY",
)

INSTITUTIONS = (
    "Ashgrove Medical Center", "Blue Ridge Community Clinic", "Brookfield Memorial Institute",
    "Cedarvale Regional Infirmary", "Clearwater Health Pavilion", "Crestline Surgical Center",
    "Eastbrook Wellness Institute", "Fernwood General Infirmary", "Glenhaven Medical Center",
    "Goldenfield Memorial Center", "Harborview Community Clinic", "Hawthorne Regional Center",
    "Hillcrest Memorial Institute", "Ironwood Health Pavilion", "Lakeshore Medical Center",
    "Larkspur Community Clinic", "Maplewood Regional Infirmary", "Meadowbrook Wellness Center",
    "Northgate Memorial Center", "Oakridge Medical Institute", "Pinecrest Health Pavilion",
    "Ridgeline Surgical Center", "Riverbend Community Clinic", "Silverlake Memorial Center",
    "Stonebridge Regional Center", "Summitview Medical Center", "Thornbury Wellness Institute",
    "Westfield General Infirmary", "Willowbrook Medical Center", "Wintervale Regional Clinic",
)

HOLIDAYS = (
    "Christmas", "Thanksgiving", "Easter", "Halloween", "Labor Day",
    "Memorial Day", "Independence Day", "Veterans Day", "New Year's Day",
    "Presidents Day", "Columbus Day", "Valentine's Day", "Saint Patrick's Day",
    "Mardi Gras", "Cinco de Mayo", "Hanukkah", "Passover", "Diwali",
)

EMAIL_DOMAINS = (
    "mailbridge.net", "postfield.org", "courierbox.com", "lettergate.net",
    "inboxharbor.org", "quickpost.io", "messagecove.com", "notemail.org",
)

URL_DOMAINS = (
    "carelink-portal.org", "mednotes-online.net", "health-records.io",
    "patientgateway.org", "clinicboard.net", "wardtracker.com",
)

URL_PATHS = (
    "records", "portal", "summary", "visits", "results", "archive",
    "intake", "profile", "billing", "schedule",
)

MONTHS = (
    "January", "February", "March", "April", "May", "June", "July",
    "August", "September", "October", "November", "December",
)

MONTHS_SHORT = (
    "Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul",
    "Aug", "Sep", "Oct", "Nov", "Dec",
)

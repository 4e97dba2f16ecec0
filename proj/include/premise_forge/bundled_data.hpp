// Copyright 2026 The Premise Forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/gen_bundled_data.py from data/. Do not edit.

#ifndef PREMISE_FORGE_BUNDLED_DATA_HPP
#define PREMISE_FORGE_BUNDLED_DATA_HPP

#include <string_view>

namespace pforge::bundled {

inline constexpr std::string_view kLexiconTsv =
    R"PFDATA(# lemma<TAB>tag; tags: Noun Adj Verb Prep Det Wh Num Poss Other
a	Det
about	Prep
above	Prep
across	Prep
address	Noun
adult	Noun
after	Prep
afternoon	Noun
against	Prep
age	Noun
air	Noun
airplane	Noun
airport	Noun
alive	Adj
all	Det
almost	Other
along	Prep
also	Other
although	Other
am	Verb
ambulance	Noun
among	Prep
an	Det
analog	Adj
anchor	Noun
ancient	Adj
and	Other
angry	Adj
animal	Noun
another	Det
any	Det
anyone	Noun
anything	Noun
apple	Noun
apron	Noun
arch	Noun
are	Verb
area	Noun
arm	Noun
around	Prep
artificial	Adj
ask	Verb
asleep	Adj
at	Prep
atop	Prep
avocado	Noun
awake	Adj
awning	Noun
baby	Noun
back	Noun
background	Noun
backpack	Noun
bacon	Noun
bad	Adj
bag	Noun
bagel	Noun
baked	Adj
balcony	Noun
bald	Adj
ball	Noun
banana	Noun
bandana	Noun
banner	Noun
barn	Noun
base	Noun
baseball	Noun
basket	Noun
basketball	Noun
bat	Noun
bathroom	Noun
batter	Noun
battery	Noun
be	Verb
beach	Noun
beak	Noun
bean	Noun
bear	Noun
beard	Noun
beautiful	Adj
because	Other
become	Verb
bed	Noun
bedding	Noun
bedroom	Noun
bee	Noun
beef	Noun
been	Verb
beer	Noun
before	Prep
begin	Verb
behind	Prep
beige	Adj
being	Verb
below	Prep
belt	Noun
bench	Noun
beneath	Prep
beside	Prep
besides	Prep
between	Prep
bicycle	Noun
big	Adj
bike	Noun
bikini	Noun
bird	Noun
black	Adj
blade	Noun
blanket	Noun
blind	Noun
blue	Adj
board	Noun
boat	Noun
body	Noun
book	Noun
boot	Noun
boss	Noun
both	Det
bottle	Noun
bottom	Noun
bowl	Noun
box	Noun
boy	Noun
bracelet	Noun
branch	Noun
brand	Noun
bread	Noun
breed	Noun
brick	Noun
bridge	Noun
bright	Adj
broccoli	Noun
broken	Verb
brother	Noun
brown	Adj
bucket	Noun
building	Noun
bulb	Noun
bumper	Noun
bunny	Noun
burger	Noun
burrito	Noun
bus	Noun
bush	Noun
busy	Adj
but	Other
butter	Noun
butterfly	Noun
button	Noun
by	Prep
cab	Noun
cabinet	Noun
cable	Noun
cake	Noun
calf	Noun
call	Verb
called	Other
calm	Adj
camera	Noun
can	Verb
candle	Noun
candy	Noun
canoe	Noun
cap	Noun
car	Noun
card	Noun
cardboard	Noun
carpet	Noun
carriage	Noun
carrot	Noun
carry	Verb
cart	Noun
carton	Noun
cat	Noun
catch	Verb
catcher	Noun
caught	Verb
ceiling	Noun
cellphone	Noun
center	Noun
cereal	Noun
chain	Noun
chair	Noun
charger	Noun
chase	Verb
checkered	Adj
cheese	Noun
chef	Noun
cherry	Noun
chicken	Noun
child	Noun
chimney	Noun
chocolate	Noun
chopped	Adj
church	Noun
circular	Adj
city	Noun
class	Noun
clean	Adj
clear	Adj
cliff	Noun
clock	Noun
close	Adj
closed	Adj
cloth	Noun
clothes	Noun
clothing	Noun
cloud	Noun
cloudless	Adj
cloudy	Adj
coat	Noun
cockpit	Noun
coffee	Noun
coin	Noun
cold	Adj
collar	Noun
color	Noun
colorful	Adj
colour	Noun
colourful	Adj
column	Noun
come	Verb
computer	Noun
concrete	Noun
cone	Noun
console	Noun
container	Noun
controller	Noun
cook	Noun
cooked	Adj
cookie	Noun
cool	Adj
cord	Noun
corn	Noun
corner	Noun
costume	Noun
cotton	Noun
couch	Noun
could	Verb
counter	Noun
couple	Noun
court	Noun
covered	Adj
cow	Noun
cream	Adj
cross	Verb
crosswalk	Noun
crowd	Noun
crowded	Adj
cry	Verb
cup	Noun
curtain	Noun
curved	Adj
cut	Verb
cute	Adj
dangerous	Adj
dark	Adj
dark-colored	Adj
daughter	Noun
day	Noun
dead	Adj
deep	Adj
deer	Noun
delicious	Adj
denim	Noun
desert	Noun
design	Noun
desk	Noun
dessert	Noun
diagonal	Adj
did	Verb
different	Adj
digital	Adj
direction	Noun
dirt	Noun
dirty	Adj
dish	Noun
do	Verb
does	Verb
dog	Noun
doll	Noun
done	Verb
donut	Noun
door	Noun
dot	Noun
dotted	Adj
doughnut	Noun
down	Prep
drawer	Noun
drawing	Noun
drawn	Verb
dress	Noun
drier	Noun
drink	Noun
drive	Verb
driver	Noun
dry	Adj
dryer	Noun
duck	Noun
duckling	Noun
dull	Adj
dumpling	Noun
during	Prep
each	Det
eagle	Noun
ear	Noun
earring	Noun
eat	Verb
eaten	Verb
edge	Noun
egg	Noun
eight	Num
eighteen	Num
either	Det
elder	Noun
electric	Adj
elephant	Noun
eleven	Num
empty	Adj
end	Noun
engine	Noun
even	Other
evening	Noun
every	Det
everyone	Noun
everything	Noun
eye	Noun
fabric	Noun
face	Noun
fake	Adj
fall	Verb
fallen	Verb
family	Noun
fan	Noun
fancy	Adj
farm	Noun
farmer	Noun
fast	Adj
fat	Adj
father	Noun
feather	Noun
feel	Verb
female	Adj
fence	Noun
few	Other
field	Noun
fifteen	Num
fifty	Num
fight	Verb
filled	Adj
finger	Noun
fire	Noun
fireplace	Noun
first	Adj
fish	Noun
five	Num
flag	Noun
flat	Adj
flavor	Noun
floor	Noun
floral	Adj
flower	Noun
flown	Verb
fluffy	Adj
fly	Verb
foggy	Adj
follow	Verb
food	Noun
foot	Noun
football	Noun
foreground	Noun
forest	Noun
fork	Noun
forty	Num
four	Num
fourteen	Num
frame	Noun
freezer	Noun
fresh	Adj
fridge	Noun
fried	Adj
friend	Noun
fries	Noun
frisbee	Noun
frog	Noun
from	Prep
front	Noun
frosting	Noun
frozen	Adj
fruit	Noun
full	Adj
fur	Noun
furry	Adj
game	Noun
garage	Noun
garden	Noun
gas	Noun
gate	Noun
gentleman	Noun
get	Verb
giant	Adj
giraffe	Noun
girl	Noun
give	Verb
given	Verb
glass	Noun
glasses	Noun
glove	Noun
go	Verb
goal	Noun
goat	Noun
goggles	Noun
gold	Adj
golden	Adj
golf	Noun
gone	Verb
good	Adj
goose	Noun
grape	Noun
grass	Noun
gray	Adj
green	Adj
grey	Adj
grilled	Adj
ground	Noun
grow	Verb
grown	Verb
gull	Noun
guy	Noun
had	Verb
hair	Noun
hairy	Adj
ham	Noun
hamburger	Noun
hammer	Noun
hand	Noun
handbag	Noun
handle	Noun
handlebar	Noun
hang	Verb
happy	Adj
hard	Adj
has	Verb
hat	Noun
have	Verb
he	Other
head	Noun
headband	Noun
headlight	Noun
healthy	Adj
heater	Noun
heavy	Adj
height	Noun
held	Verb
helicopter	Noun
helmet	Noun
help	Verb
her	Other
here	Other
high	Adj
highway	Noun
hill	Noun
hillside	Noun
him	Other
his	Other
hit	Verb
hockey	Noun
hold	Verb
home	Noun
honey	Noun
hood	Noun
hoodie	Noun
hoof	Noun
hook	Noun
hoop	Noun
horizon	Noun
horizontal	Adj
horn	Noun
horse	Noun
hot	Adj
hotdog	Noun
house	Noun
how	Wh
huge	Adj
hundred	Num
hung	Verb
hut	Noun
hydrant	Noun
i	Other
ice	Noun
icecream	Noun
icing	Noun
if	Other
image	Noun
in	Prep
indoor	Adj
indoors	Adj
infant	Noun
inner	Adj
insect	Noun
inside	Prep
into	Prep
is	Verb
island	Noun
it	Other
item	Noun
its	Other
jacket	Noun
jam	Noun
jar	Noun
jeans	Noun
jeep	Noun
jersey	Noun
jet	Noun
juice	Noun
jump	Verb
just	Other
kayak	Noun
keep	Verb
kettle	Noun
keyboard	Noun
kick	Verb
kid	Noun
kind	Noun
king	Noun
kiss	Noun
kitchen	Noun
kite	Noun
kitten	Noun
knee	Noun
knife	Noun
label	Noun
lady	Noun
lain	Verb
lake	Noun
lamb	Noun
lamp	Noun
lane	Noun
lantern	Noun
laptop	Noun
large	Adj
last	Adj
laugh	Verb
lawn	Noun
lay	Verb
lead	Verb
leaf	Noun
lean	Verb
least	Other
leather	Noun
leave	Verb
left	Noun
leg	Noun
lemon	Noun
length	Noun
less	Other
let	Verb
letter	Noun
lettuce	Noun
license	Noun
lid	Noun
lie	Verb
light	Adj
light-colored	Adj
lighting	Noun
lights	Noun
like	Prep
lime	Noun
limo	Noun
limousine	Noun
line	Noun
lion	Noun
lip	Noun
little	Adj
logo	Noun
long	Adj
look	Verb
lot	Other
lots	Other
loud	Adj
lovely	Adj
low	Adj
lower	Adj
luggage	Noun
made	Verb
magazine	Noun
make	Verb
male	Adj
man	Noun
mane	Noun
many	Other
map	Noun
marble	Noun
market	Noun
maroon	Adj
mask	Noun
mast	Noun
mat	Noun
match	Noun
material	Noun
mattress	Noun
may	Verb
me	Other
mean	Verb
meat	Noun
melon	Noun
menu	Noun
metal	Noun
metallic	Adj
meter	Noun
microwave	Noun
middle	Noun
might	Verb
milk	Noun
mine	Other
mirror	Noun
model	Noun
modern	Adj
money	Noun
monitor	Noun
monkey	Noun
moon	Noun
more	Other
morning	Noun
most	Other
mother	Noun
motorbike	Noun
motorcycle	Noun
mound	Noun
mountain	Noun
mouse	Noun
mouth	Noun
move	Verb
much	Other
mud	Noun
muffin	Noun
mug	Noun
mushroom	Noun
must	Verb
mustache	Noun
my	Other
nail	Noun
name	Noun
named	Other
napkin	Noun
narrow	Adj
natural	Adj
navy	Adj
near	Prep
neck	Noun
necklace	Noun
need	Verb
neither	Det
net	Noun
new	Adj
newspaper	Noun
next	Adj
nice	Adj
night	Noun
nine	Num
nineteen	Num
no	Det
noodle	Noun
nose	Noun
not	Other
nothing	Noun
now	Other
number	Noun
object	Noun
ocean	Noun
of	Prep
off	Prep
office	Noun
officer	Noun
old	Adj
olive	Noun
on	Prep
one	Num
onion	Noun
only	Other
onto	Prep
open	Adj
or	Other
orange	Adj
other	Adj
our	Other
out	Prep
outdoor	Adj
outdoors	Adj
outer	Adj
outfit	Noun
outlet	Noun
outside	Prep
oven	Noun
over	Prep
overcast	Adj
owl	Noun
package	Noun
painting	Noun
pale	Adj
pan	Noun
pancake	Noun
pants	Noun
paper	Noun
park	Noun
parking	Noun
parrot	Noun
part	Noun
past	Prep
pasta	Noun
path	Noun
pattern	Noun
paw	Noun
peach	Noun
pear	Noun
pedal	Noun
people	Noun
pepper	Noun
per	Prep
person	Noun
phone	Noun
photo	Noun
photograph	Noun
picture	Noun
pie	Noun
piece	Noun
pig	Noun
pigeon	Noun
pillar	Noun
pillow	Noun
pineapple	Noun
ping	Noun
pink	Adj
pitch	Noun
pitcher	Noun
pizza	Noun
place	Noun
plaid	Adj
plain	Adj
plane	Noun
plant	Noun
plastic	Adj
plate	Noun
play	Verb
player	Noun
playground	Noun
please	Other
plug	Noun
pocket	Noun
point	Verb
pole	Noun
policeman	Noun
polka	Adj
polo	Noun
pond	Noun
pony	Noun
porch	Noun
position	Noun
post	Noun
poster	Noun
pot	Noun
potato	Noun
pretty	Adj
professional	Adj
propeller	Noun
pudding	Noun
pull	Verb
puppet	Noun
puppy	Noun
purple	Adj
purse	Noun
push	Verb
put	Verb
queen	Noun
quiet	Adj
quite	Other
rabbit	Noun
racket	Noun
racquet	Noun
radiator	Noun
rail	Noun
railing	Noun
rain	Noun
rainy	Adj
rat	Noun
raw	Adj
reach	Verb
read	Verb
real	Adj
really	Other
rear	Adj
reason	Noun
rectangular	Adj
red	Adj
reed	Noun
reflection	Noun
refrigerator	Noun
remote	Noun
rest	Verb
restaurant	Noun
rice	Noun
ridden	Verb
ride	Verb
rider	Noun
right	Noun
ring	Noun
ripe	Adj
river	Noun
road	Noun
rock	Noun
roof	Noun
room	Noun
rooster	Noun
rope	Noun
rotten	Adj
rough	Adj
round	Adj
rug	Noun
run	Verb
runway	Noun
sad	Adj
safe	Adj
safety	Noun
sail	Verb
sailboat	Noun
salad	Noun
salty	Adj
same	Adj
sand	Noun
sandal	Noun
sandwich	Noun
sapling	Noun
sat	Verb
sauce	Noun
sausage	Noun
saw	Noun
say	Verb
scarf	Noun
scene	Noun
scissors	Noun
scooter	Noun
score	Noun
scoreboard	Noun
screen	Noun
screw	Noun
sea	Noun
seagull	Noun
season	Noun
seat	Noun
second	Adj
see	Verb
seed	Noun
seem	Verb
seen	Verb
serve	Verb
seven	Num
seventeen	Num
several	Other
shadow	Noun
shall	Verb
shallow	Adj
shape	Noun
sharp	Adj
she	Other
shed	Noun
sheep	Noun
sheet	Noun
shelf	Noun
shiny	Adj
ship	Noun
shirt	Noun
shoe	Noun
shop	Noun
shore	Noun
short	Adj
shorts	Noun
should	Verb
shoulder	Noun
show	Verb
shown	Verb
shrimp	Noun
sibling	Noun
side	Noun
sidewalk	Noun
sight	Noun
sign	Noun
silk	Noun
silver	Adj
sink	Noun
sister	Noun
sit	Verb
six	Num
sixteen	Num
size	Noun
skate	Verb
skateboard	Noun
skateboarder	Noun
ski	Noun
skier	Noun
skiing	Noun
skin	Noun
skinny	Adj
skirt	Noun
sky	Noun
skyscraper	Noun
sled	Noun
sleep	Verb
sleeve	Noun
sliced	Adj
sling	Noun
slow	Adj
small	Adj
smile	Verb
smoke	Noun
smooth	Adj
snake	Noun
sneaker	Noun
snow	Noun
snowboard	Noun
snowboarder	Noun
snowy	Adj
so	Other
soccer	Noun
sock	Noun
soda	Noun
sofa	Noun
soft	Adj
soldier	Noun
some	Det
someone	Noun
something	Noun
son	Noun
sort	Noun
soup	Noun
sour	Adj
spicy	Adj
spoon	Noun
sport	Noun
spot	Noun
spotted	Adj
spring	Noun
sprinkle	Noun
square	Adj
squirrel	Noun
stadium	Noun
stair	Noun
staircase	Noun
stale	Adj
stand	Verb
star	Noun
station	Noun
steak	Noun
steel	Noun
step	Noun
sticker	Noun
still	Other
stone	Noun
stood	Verb
stop	Noun
store	Noun
stormy	Adj
stove	Noun
straight	Adj
straw	Noun
strawberry	Noun
street	Noun
string	Noun
stripe	Noun
striped	Adj
student	Noun
stuff	Noun
stuffing	Noun
style	Noun
subway	Noun
such	Det
suit	Noun
suitcase	Noun
sun	Noun
sunglasses	Noun
sunny	Adj
sunrise	Noun
sunset	Noun
surf	Verb
surfboard	Noun
surfer	Noun
surfing	Noun
swan	Noun
sweater	Noun
sweet	Adj
swim	Verb
swimsuit	Noun
swing	Verb
switch	Noun
syrup	Noun
table	Noun
taco	Noun
tail	Noun
take	Verb
taken	Verb
talk	Verb
tall	Adj
tan	Adj
tasty	Adj
taxi	Noun
tea	Noun
teacher	Noun
teal	Adj
team	Noun
teddy	Noun
teen	Noun
teenager	Noun
television	Noun
tell	Verb
temperature	Noun
ten	Num
tennis	Noun
tent	Noun
text	Noun
than	Prep
that	Det
the	Det
their	Other
them	Other
then	Other
there	Other
these	Det
they	Other
thick	Adj
thin	Adj
thing	Noun
third	Adj
thirteen	Num
thirty	Num
this	Det
those	Det
thousand	Num
thread	Noun
three	Num
through	Prep
throw	Verb
thrown	Verb
ticket	Noun
tie	Noun
tiger	Noun
tile	Noun
time	Noun
tiny	Adj
tire	Noun
to	Prep
toaster	Noun
toddler	Noun
toilet	Noun
tomato	Noun
tongue	Noun
too	Other
tool	Noun
tooth	Noun
toothbrush	Noun
top	Noun
topping	Noun
tourist	Noun
toward	Prep
towards	Prep
towel	Noun
tower	Noun
town	Noun
toy	Noun
track	Noun
tractor	Noun
traffic	Noun
trail	Noun
trailer	Noun
train	Noun
tram	Noun
tray	Noun
tree	Noun
)PFDATA"
    R"PFDATA(trolley	Noun
truck	Noun
trunk	Noun
try	Verb
tunnel	Noun
turn	Verb
turquoise	Adj
turtle	Noun
tv	Noun
twelve	Num
twenty	Num
two	Num
type	Noun
ugly	Adj
umbrella	Noun
umpire	Noun
under	Prep
underneath	Prep
uniform	Noun
up	Prep
upon	Prep
upper	Adj
us	Other
use	Verb
valley	Noun
van	Noun
vase	Noun
vegetable	Noun
vehicle	Noun
vent	Noun
vertical	Adj
very	Other
vest	Noun
via	Prep
video	Noun
view	Noun
village	Noun
violet	Adj
volleyball	Noun
waffle	Noun
wagon	Noun
wait	Verb
waiter	Noun
walk	Verb
wall	Noun
warm	Adj
was	Verb
watch	Noun
water	Noun
watermelon	Noun
wave	Noun
way	Noun
we	Other
wear	Verb
weather	Noun
wedding	Noun
weed	Noun
weight	Noun
were	Verb
wet	Adj
wetsuit	Noun
what	Wh
wheel	Noun
when	Wh
where	Wh
which	Wh
while	Other
white	Adj
who	Wh
whole	Adj
whom	Wh
whose	Wh
why	Wh
wide	Adj
wii	Noun
will	Verb
wind	Noun
window	Noun
windshield	Noun
windy	Adj
wine	Noun
wing	Noun
wire	Noun
with	Prep
within	Prep
without	Prep
woman	Noun
wood	Noun
wooden	Adj
wool	Noun
word	Noun
worker	Noun
worn	Verb
would	Verb
wrap	Noun
wrench	Noun
wristband	Noun
write	Verb
writing	Noun
written	Verb
yacht	Noun
yard	Noun
year	Noun
yellow	Adj
yes	Other
yogurt	Noun
you	Other
young	Adj
your	Other
yours	Other
zebra	Noun
zero	Num
zipper	Noun
)PFDATA";

inline constexpr std::string_view kStoplist =
    R"PFDATA(# Lemmas that refer to the image itself rather than its content.
photo
image
picture
photograph
pic
snapshot
scene
)PFDATA";

inline constexpr std::string_view kAbstractionNouns =
    R"PFDATA(# Nouns dropped when they are the target of a wh-word ("what color", "which kind of").
brand
color
colour
kind
type
sort
time
number
shape
material
breed
style
flavor
pattern
make
)PFDATA";

inline constexpr std::string_view kColorTerms =
    R"PFDATA(black
blue
brown
gray
grey
green
orange
pink
purple
red
white
yellow
silver
gold
golden
beige
tan
maroon
navy
teal
turquoise
violet
cream
)PFDATA";

inline constexpr std::string_view kAnimateNouns =
    R"PFDATA(person
man
woman
boy
girl
child
kid
baby
lady
guy
gentleman
people
player
batter
catcher
pitcher
umpire
skier
surfer
skateboarder
snowboarder
rider
driver
officer
policeman
soldier
chef
cook
waiter
worker
farmer
teacher
student
tourist
crowd
team
family
couple
friend
mother
father
son
daughter
brother
sister
adult
teenager
teen
toddler
infant
)PFDATA";

inline constexpr std::string_view kExclusionLexicon =
    R"PFDATA(# Mutually exclusive attributes. "ANTONYM a b" declares an antonym pair;
# "SISTER a b c ..." declares a group of taxonomic sister terms.
SISTER black blue brown gray green orange pink purple red white yellow
ANTONYM old young
ANTONYM old new
ANTONYM large small
ANTONYM big small
ANTONYM large little
ANTONYM big little
ANTONYM huge tiny
ANTONYM tall short
ANTONYM long short
ANTONYM wide narrow
ANTONYM thick thin
ANTONYM fat thin
ANTONYM fat skinny
ANTONYM heavy light
ANTONYM high low
ANTONYM deep shallow
ANTONYM open closed
ANTONYM empty full
ANTONYM clean dirty
ANTONYM wet dry
ANTONYM hot cold
ANTONYM warm cool
ANTONYM warm cold
ANTONYM bright dark
ANTONYM light dark
ANTONYM shiny dull
ANTONYM sunny cloudy
ANTONYM clear cloudy
ANTONYM cloudless cloudy
ANTONYM cloudless overcast
ANTONYM happy sad
ANTONYM calm angry
ANTONYM quiet loud
ANTONYM busy empty
ANTONYM crowded empty
ANTONYM hard soft
ANTONYM smooth rough
ANTONYM sharp dull
ANTONYM round square
ANTONYM curved straight
ANTONYM fast slow
ANTONYM moving still
ANTONYM moving parked
ANTONYM good bad
ANTONYM pretty ugly
ANTONYM beautiful ugly
ANTONYM male female
ANTONYM left right
ANTONYM upper lower
ANTONYM front back
ANTONYM front rear
ANTONYM inner outer
ANTONYM same different
ANTONYM real fake
ANTONYM alive dead
ANTONYM asleep awake
ANTONYM sweet sour
ANTONYM safe dangerous
ANTONYM broken whole
ANTONYM natural artificial
ANTONYM plain fancy
ANTONYM plain striped
ANTONYM plain spotted
ANTONYM plain patterned
ANTONYM vertical horizontal
ANTONYM indoor outdoor
ANTONYM fresh stale
ANTONYM fresh rotten
ANTONYM ripe unripe
ANTONYM raw cooked
ANTONYM frozen melted
ANTONYM on off
ANTONYM full half
ANTONYM wooden metal
ANTONYM young elderly
)PFDATA";

inline constexpr std::string_view kClassAliases =
    R"PFDATA(# alias canonical: maps question lemmas onto the object class inventory.
man person
woman person
boy person
girl person
child person
kid person
baby person
lady person
guy person
gentleman person
people person
player person
batter person
catcher person
pitcher person
umpire person
skier person
surfer person
skateboarder person
snowboarder person
rider person
bike bicycle
motorbike motorcycle
plane airplane
jet airplane
ship boat
sailboat boat
canoe boat
kayak boat
hydrant fire hydrant
meter parking meter
puppy dog
kitten cat
calf cow
lamb sheep
pony horse
purse handbag
bag handbag
luggage suitcase
ski skis
ball sports ball
racket tennis racket
racquet tennis racket
bat baseball bat
glove baseball glove
glass wine glass
doughnut donut
hotdog hot dog
sofa couch
plant potted plant
table dining table
television tv
phone cell phone
cellphone cell phone
fridge refrigerator
teddy teddy bear
dryer hair drier
drier hair drier
)PFDATA";

inline constexpr std::string_view kCocoClasses =
    R"PFDATA(person
bicycle
car
motorcycle
airplane
bus
train
truck
boat
traffic light
fire hydrant
stop sign
parking meter
bench
bird
cat
dog
horse
sheep
cow
elephant
bear
zebra
giraffe
backpack
umbrella
handbag
tie
suitcase
frisbee
skis
snowboard
sports ball
kite
baseball bat
baseball glove
skateboard
surfboard
tennis racket
bottle
wine glass
cup
fork
knife
spoon
bowl
banana
apple
sandwich
orange
broccoli
carrot
hot dog
pizza
donut
cake
chair
couch
potted plant
bed
dining table
toilet
tv
laptop
mouse
remote
keyboard
cell phone
microwave
oven
toaster
sink
refrigerator
book
clock
vase
scissors
teddy bear
hair drier
toothbrush
)PFDATA";

}  // namespace pforge::bundled

#endif  // PREMISE_FORGE_BUNDLED_DATA_HPP

window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#why-staggered-fields-are-interesting","introduction.html#layout","operators.html#operators-on-the-chain","operators.html#basis-convention","operators.html#building-multi-site-operators","operators.html#hermitian-eigendecomposition","model.html#the-xy-chain-in-a-transverse-field","model.html#the-two-site-special-case","model.html#parity-symmetry","model.html#two-local-unitaries-that-organize-the-physics","thermal.html#thermal-states","thermal.html#staying-finite-at-β--50","thermal.html#limits-worth-remembering","thermal.html#covariance-under-the-symmetry-operators","negativity.html#negativity-and-x-states","negativity.html#from-the-chain-to-a-pair","negativity.html#x-states","negativity.html#the-two-site-chain-in-closed-form","sweeps.html#sweeps-and-the-command-line","sweeps.html#the-library-interface","sweeps.html#peaks","sweeps.html#the-binary","sweeps.html#self-checks"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"17":{"tf":2.8284271247461903},"18":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":12,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"22":{"tf":1.0}},"df":1}}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"0":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":2.0},"8":{"tf":1.0}},"df":5,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}}},"1":{"docs":{"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2},"2":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":3}},"1":{"docs":{"20":{"tf":1.0}},"df":1},"2":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"4":{"docs":{"10":{"tf":1.4142135623730951}},"df":1},"5":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":11,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951}},"df":2}}}}},"7":{"docs":{"10":{"tf":1.4142135623730951}},"df":1},"8":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2},"9":{"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2}},"0":{"docs":{"15":{"tf":1.0},"4":{"tf":1.0}},"df":2},"1":{"docs":{"13":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"1":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":2.23606797749979},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":2.23606797749979}},"df":14,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}},"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}},",":{"docs":{},"df":0,"2":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}},".":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.0},"4":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":7,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":4}}}}},"2":{"docs":{"7":{"tf":1.4142135623730951}},"df":1},"3":{"docs":{"10":{"tf":1.4142135623730951}},"df":1},"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"6":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,"4":{"docs":{},"df":0,"5":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{},"df":0,"5":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":5},"t":{"docs":{"11":{"tf":1.0}},"df":1}},"0":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}},"df":3,"⟩":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"√":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"1":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2,"⟩":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"√":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"2":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"df":9},"3":{"docs":{"10":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3},"4":{"docs":{"15":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3},"5":{"docs":{"8":{"tf":1.0}},"df":1},"6":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1}}},"e":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":2.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":17,"6":{"docs":{"13":{"tf":1.0}},"df":1}}},"2":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"22":{"tf":2.6457513110645907},"23":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":11,",":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0}},"df":1},"3":{"docs":{"8":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"6":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"9":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{},"df":0,"0":{"docs":{},"df":0,"7":{"docs":{},"df":0,"4":{"docs":{},"df":0,"8":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"^":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"3":{"tf":1.0}},"df":1}},"n":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"x":{"docs":{},"df":0,"2":{"docs":{"17":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"3":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":2.0}},"df":3},"4":{"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}},"df":6,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{"3":{"tf":1.0}},"df":1}}},"1":{"docs":{"20":{"tf":1.0}},"df":1},"b":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.0}},"df":1},"2":{"docs":{"17":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"4":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"5":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0}},"df":1}},"0":{"docs":{"12":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}},"6":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2,"4":{"docs":{"7":{"tf":1.0}},"df":1}},"7":{"docs":{"23":{"tf":1.0}},"df":1},"9":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2},"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}},"i":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":3},"x":{"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"6":{"tf":1.0}},"df":3},"z":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"a":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.7320508075688772}},"df":1},"2":{"docs":{"17":{"tf":1.7320508075688772}},"df":1},"3":{"docs":{"17":{"tf":1.7320508075688772}},"df":1},"4":{"docs":{"17":{"tf":1.7320508075688772}},"df":1},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}},"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1},"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"20":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}}}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"22":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"z":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"u":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"u":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"z":{"docs":{},"df":0,"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"17":{"tf":1.0}},"df":1}}}},"b":{"docs":{"0":{"tf":2.0},"1":{"tf":1.4142135623730951},"10":{"tf":2.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"18":{"tf":2.23606797749979},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":2.449489742783178},"23":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772}},"df":13,"1":{"docs":{"17":{"tf":2.0}},"df":1},"2":{"docs":{"17":{"tf":2.0}},"df":1},"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}},"e":{"docs":{"21":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.7320508075688772}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{"12":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"t":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":3}},"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":6}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"df":2},"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}},"c":{"docs":{"15":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":3.4641016151377544}},"df":1},"5":{"docs":{"15":{"tf":2.0}},"df":1}}}},"6":{"docs":{},"df":0,"4":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.7320508075688772}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}},"x":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}},"p":{"docs":{"3":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"2":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":11,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":5,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3},"4":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.0}},"df":4},"6":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0}},"df":3},"n":{"docs":{"10":{"tf":2.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":3}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}},"i":{"docs":{"23":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}},"df":5,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}},"e":{"docs":{"13":{"tf":1.0}},"df":1},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"3":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"21":{"tf":1.0}},"df":4}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}}},"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0},"14":{"tf":1.7320508075688772}},"df":2}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"v":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}},"v":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}},"d":{"docs":{"18":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"s":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3,"(":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"17":{"tf":2.0},"4":{"tf":1.0}},"df":3}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"i":{"docs":{"6":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0}},"df":3}}}},"e":{"docs":{"11":{"tf":1.0},"12":{"tf":1.4142135623730951}},"df":2,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"±":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"22":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0},"15":{"tf":1.7320508075688772},"6":{"tf":1.7320508075688772}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"[":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"22":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0}},"df":8}}}},"i":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0}},"df":5},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0}},"df":3,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"p":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"_":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":2.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}},"i":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}},"r":{"docs":{"12":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}},"w":{"docs":{"5":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.8284271247461903},"10":{"tf":2.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":12,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":12,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.7320508075688772},"12":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}},"t":{"docs":{"2":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":3}}},"x":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0}},"df":4}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":2.449489742783178},"14":{"tf":1.4142135623730951},"23":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}},"m":{"docs":{"0":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":6,"a":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"18":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0}},"df":4}}},"p":{"docs":{"13":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.0},"23":{"tf":1.0}},"df":6,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"13":{"tf":1.7320508075688772}},"df":2,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{"22":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"h":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":2.0},"12":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"1":{"docs":{"8":{"tf":1.0}},"df":1},"2":{"docs":{"8":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0}},"df":2},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"6":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}},"+":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.0}},"df":1}},".":{"docs":{"12":{"tf":1.0}},"df":1},"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":2.0},"14":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}},"s":{"docs":{"7":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}},"j":{"docs":{"7":{"tf":1.7320508075688772}},"df":1,"o":{"docs":{},"df":0,"b":{"docs":{"23":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}},"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"z":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{"5":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}},"t":{"docs":{"3":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"f":{"docs":{"22":{"tf":1.0}},"df":1},"i":{"docs":{"12":{"tf":1.0}},"df":1,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0}},"df":2},"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"g":{"docs":{"12":{"tf":1.4142135623730951}},"df":1,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{"23":{"tf":1.0}},"df":1}},"w":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"m":{"docs":{"6":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18}},"k":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}},"p":{"docs":{"3":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":5},"x":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"3":{"tf":1.0},"9":{"tf":1.0}},"df":6}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}},"x":{"docs":{"22":{"tf":1.4142135623730951}},"df":1,"[":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}},"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"22":{"tf":1.4142135623730951}},"df":1},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}},"x":{"docs":{"13":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"7":{"tf":1.0}},"df":6,"’":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"r":{"docs":{"1":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":2.0},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":10,",":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"a":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"g":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":13,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"10":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}},"n":{"docs":{"6":{"tf":1.0}},"df":1,"e":{"docs":{"9":{"tf":1.0}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"6":{"tf":1.0}},"df":2},"h":{"docs":{"19":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"w":{"docs":{"12":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"18":{"tf":1.0},"23":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"k":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":9,"c":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":4},"t":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.0},"5":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":6,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"13":{"tf":1.0}},"df":1}},"2":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":4,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"p":{"docs":{"9":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":2.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"’":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.4142135623730951},"23":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":3}}},"t":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"23":{"tf":1.7320508075688772}},"df":1},"t":{"docs":{"12":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":12,",":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,",":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"b":{"docs":{},"df":0,",":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1},"x":{"docs":{"6":{"tf":1.4142135623730951}},"df":1},"z":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.7320508075688772},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951}},"df":3}},"r":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{"22":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0}},"df":4}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0}},"df":3,"t":{"docs":{"2":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"w":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}},"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2},"l":{"docs":{"17":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":2,"i":{"docs":{},"df":0,"z":{"docs":{"2":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{"12":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.0}},"df":3,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"23":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"w":{"docs":{"22":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"n":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}},"2":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2},"y":{"docs":{"7":{"tf":1.0}},"df":1},"z":{"docs":{"10":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":2}},"j":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1},"x":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"22":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5},"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"e":{"docs":{"1":{"tf":1.0},"17":{"tf":1.4142135623730951}},"df":2},"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0},"21":{"tf":2.23606797749979},"22":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}},"o":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":6,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951}},"df":2}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"β":{"docs":{},"df":0,"d":{"docs":{},"df":0,"/":{"docs":{},"df":0,"4":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2,"e":{"docs":{"0":{"tf":2.8284271247461903},"10":{"tf":2.449489742783178},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":2.0},"17":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":2.449489742783178},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":15,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1},"x":{"docs":{"5":{"tf":1.0}},"df":1},"z":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"x":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0}},"df":6,".":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":2,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"10":{"tf":1.7320508075688772},"21":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":5}}}},"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":2.23606797749979},"14":{"tf":1.4142135623730951},"15":{"tf":2.23606797749979},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772},"2":{"tf":1.7320508075688772},"23":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.0},"9":{"tf":1.0}},"df":16,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.7320508075688772}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":4}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"m":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"8":{"tf":1.0}},"df":3},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0}},"df":9,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":2}}}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"5":{"tf":2.0}},"df":1},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3,"i":{"docs":{"17":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"18":{"tf":2.0},"21":{"tf":1.0}},"df":7,"a":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"9":{"tf":1.0}},"df":2,"n":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":8}}}}}}}},"n":{"docs":{"6":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}},"df":4}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"o":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":2.0},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":15}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{"10":{"tf":2.0},"14":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"23":{"tf":1.0}},"df":2,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":6,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"7":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{"10":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":2.0},"14":{"tf":1.4142135623730951},"15":{"tf":2.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":2.23606797749979},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":19}},"v":{"docs":{"11":{"tf":2.0},"12":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"df":3,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"u":{"docs":{"15":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0}},"df":1},"5":{"docs":{"21":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"<":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1,"f":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2}},"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"w":{"docs":{"6":{"tf":1.0}},"df":1,"[":{"docs":{},"df":0,"3":{"docs":{"6":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"y":{"docs":{"5":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}},"x":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":2.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":12,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"x":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"x":{"docs":{"7":{"tf":1.0}},"df":1},"y":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0}},"df":3,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":4,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0}},"df":8}}}}}}}}},"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"z":{"docs":{},"df":0,"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"{":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1},"z":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":6}}}}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"df":4,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}},"z":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}},"1":{"docs":{"4":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"5":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":10}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":5}}}}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":5}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"23":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":8}},"y":{"docs":{"12":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":5}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":4}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":4,"y":{"docs":{"10":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"title":{"root":{"docs":{},"df":0,"5":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"23":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3}},"y":{"docs":{"12":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0}},"df":2,"y":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"xychain computes how much entanglement survives thermal noise in a small\\nquantum spin chain. The system is the anisotropic XY model: N spin-1/2 sites\\non a ring, each coupled to its neighbors through their x and y spin\\ncomponents, sitting in a transverse magnetic field that is either uniform\\n(the same B on every site) or staggered (+B on odd sites, -B on even\\nsites). The quantity of interest is the negativity of a nearest-neighbor\\npair — an entanglement measure that is zero exactly when the pair’s partial\\ntranspose stays positive — evaluated in the Gibbs state exp(-βH)/Z at\\ntemperature T. Everything is exact: the Hamiltonian is diagonalized densely (N ≤ 12 keeps\\nthe 2^N-dimensional matrices comfortable on a laptop), so the numbers carry\\nno sampling or truncation error beyond floating point. For two sites the\\nlibrary also carries the closed-form answer, and its test suite holds the\\ntwo routes against each other at the 1e-9 level. A first computation — the two-site isotropic chain at low temperature is\\nalmost a pure singlet, so its negativity is almost maximal: #![allow(unused)] fn main() {\\nuse xychain::model::{ChainSpec, FieldPattern};\\nuse xychain::entanglement::thermal_pair_negativity; let spec = ChainSpec::new(2, 1.0, 0.0, FieldPattern::Uniform)?;\\nlet neg = thermal_pair_negativity(&spec, 0.02, 1)?;\\nassert!((neg.value - 0.5).abs() < 1e-6); Ok::<(), xychain::Error>(()) } The arguments read: 2 sites, anisotropy γ = 1, field B = 0, uniform pattern;\\nthen temperature T = 0.02 and the pair starting at site 1.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"A uniform field competes with the exchange coupling everywhere at once; a\\nstaggered field frustrates it differently on the two sublattices. The\\nresult, visible in a field sweep at fixed temperature, is a qualitative\\nchange of shape: at moderate anisotropy the uniform-field negativity curve\\ndevelops three peaks as B varies while the staggered curve shows two, and the staggered field sustains more entanglement near its peaks.\\nTwo exact operator identities organize the picture: flipping every spin about x reverses the field sign, so every curve is\\nsymmetric about B = 0; flipping only the even sublattice turns the staggered chain into the\\nuniform one with the anisotropy reversed — so at γ = 0 the two field\\npatterns give identical entanglement, peak structure and all. Both identities are implemented as operators you can apply and test, not\\njust facts stated in documentation; see The XY chain in a transverse\\nfield.","breadcrumbs":"Introduction » Why staggered fields are interesting","id":"1","title":"Why staggered fields are interesting"},"10":{"body":"Field-sign reversal. Conjugating by the global flip U = ⊗_i σ_x sends\\ns_iz to -s_iz on every site while leaving the x-x coupling alone and\\nflipping the y-y coupling twice (no net change). Hence H(γ, B) ↦ H(γ, -B)\\nfor either pattern: #![allow(unused)] fn main() {\\nuse xychain::model::{global_x_flip, ChainSpec, FieldPattern}; let n = 4;\\nlet u = global_x_flip(n)?;\\nlet h_plus = ChainSpec::new(n, 0.7, 1.3, FieldPattern::Uniform)?.hamiltonian()?;\\nlet h_minus = ChainSpec::new(n, 0.7, -1.3, FieldPattern::Uniform)?.hamiltonian()?;\\nassert!(u.dot(&h_plus).dot(&u).max_abs_diff(&h_minus) < 1e-13); Ok::<(), xychain::Error>(()) } Because the flip acts site-by-site, it cannot change any entanglement\\nmeasure — so every negativity-versus-B curve is symmetric about B = 0, at\\nevery temperature, without further computation. Staggered ↔ uniform. Flipping only the even sublattice,\\nU = σ_x on sites {2, 4, …, N}, reverses s_iz exactly on the sites where the\\nstaggered field points down, turning the staggered field into a uniform one.\\nEach bond has one flipped endpoint, so the y-y coupling changes sign: #![allow(unused)] fn main() {\\nuse xychain::model::{sublattice_x_flip, ChainSpec, FieldPattern}; let n = 6;\\nlet u = sublattice_x_flip(n)?;\\nlet h_stag = ChainSpec::new(n, 0.4, 0.9, FieldPattern::Staggered)?.hamiltonian()?;\\nlet h_unif = ChainSpec::new(n, -0.4, 0.9, FieldPattern::Uniform)?.hamiltonian()?;\\nassert!(u.dot(&h_stag).dot(&u).max_abs_diff(&h_unif) < 1e-13); Ok::<(), xychain::Error>(()) } At γ = 0 the anisotropy reversal is invisible, so the two field patterns are locally unitarily equivalent — identical spectra, identical thermal\\nstates up to single-site flips, identical entanglement. The coinciding\\nγ = 0 sweep curves in Sweeps and the command line are this\\nidentity made visible.","breadcrumbs":"The XY chain in a transverse field » Two local unitaries that organize the physics","id":"10","title":"Two local unitaries that organize the physics"},"11":{"body":"At temperature T (k_B = 1, so β = 1/T) the chain settles into the Gibbs\\nstate ρ(T) = exp(-βH) / Z, Z = Tr exp(-βH). gibbs_state computes it through the eigendecomposition: if H = V diag(λ) V†\\nthen ρ = V diag(e^{-βλ}) V† / Σ e^{-βλ}. #![allow(unused)] fn main() {\\nuse xychain::model::{ChainSpec, FieldPattern};\\nuse xychain::thermal::gibbs_state; let h = ChainSpec::new(4, 0.5, 1.0, FieldPattern::Staggered)?.hamiltonian()?;\\nlet state = gibbs_state(&h, 0.2)?;\\nassert!((state.rho().trace().re - 1.0).abs() < 1e-12);\\nassert_eq!(state.beta(), 5.0); Ok::<(), xychain::Error>(()) }","breadcrumbs":"Thermal states » Thermal states","id":"11","title":"Thermal states"},"12":{"body":"The interesting curves in this model are taken down to T = 0.02, i.e.\\nβ = 50. Exponentiating raw eigenvalues there is numerically fatal: chain\\nenergies of order ±5 give e^{±250}, far past both ends of f64 range. The\\nimplementation therefore shifts the spectrum by the ground energy λ₀ before\\nexponentiating, ρ = V diag(e^{-β(λ - λ₀)}) V† / Σ e^{-β(λ - λ₀)}, which is algebraically the same state — the shift cancels between numerator\\nand denominator — but every Boltzmann factor now lies in (0, 1]. For the\\nsame reason the partition function is stored as log_partition() =\\nlog Tr e^{-β(H - λ₀)}; the unshifted log Z is recovered as log_partition() - beta() * ground_energy() when needed. #![allow(unused)] fn main() {\\nuse xychain::model::{ChainSpec, FieldPattern};\\nuse xychain::thermal::gibbs_state; // β = 50 with a strong field: raw exp(-βH) would overflow\\nlet h = ChainSpec::new(6, 1.0, 2.0, FieldPattern::Uniform)?.hamiltonian()?;\\nlet state = gibbs_state(&h, 0.02)?;\\nassert!(state.rho().matrix().iter().all(|z| z.re.is_finite()));\\nassert!((state.rho().trace().re - 1.0).abs() < 1e-12); Ok::<(), xychain::Error>(()) }","breadcrumbs":"Thermal states » Staying finite at β = 50","id":"12","title":"Staying finite at β = 50"},"13":{"body":"At very high temperature every state is equally likely and ρ approaches the\\nmaximally mixed matrix I/2^N — a useful sanity anchor because entanglement\\nmust then vanish: #![allow(unused)] fn main() {\\nuse xychain::model::{ChainSpec, FieldPattern};\\nuse xychain::operator::Operator;\\nuse xychain::thermal::gibbs_state; let spec = ChainSpec::new(4, 0.5, 1.0, FieldPattern::Staggered)?;\\nlet state = gibbs_state(&spec.hamiltonian()?, 1e6)?;\\nlet mixed = &Operator::identity(16)? * (1.0 / 16.0);\\nassert!(state.rho().max_abs_diff(&mixed) < 1e-5); Ok::<(), xychain::Error>(()) } At low temperature ρ projects onto the ground state. The two-site isotropic\\nchain (γ = 1, B = 0) has the singlet (|01⟩ - |10⟩)/√2 as its ground state\\nwith a gap of 1/2, so at T = 0.02 the thermal state is a singlet to better\\nthan one part in 10⁸ — which is where the near-maximal negativity in the\\nintroduction comes from. Exactly T = 0 is rejected ( Error::NonPositiveTemperature): with a\\ndegenerate ground space the zero-temperature limit depends on how the limit\\nis taken, and every quantity of interest here is defined at T > 0 anyway.","breadcrumbs":"Thermal states » Limits worth remembering","id":"13","title":"Limits worth remembering"},"14":{"body":"Conjugating H by a unitary conjugates its Gibbs state, with the same Z.\\nApplied to the two flips from the model chapter, this is the\\nmechanism that pushes the operator identities down to statements about\\nthermal entanglement: #![allow(unused)] fn main() {\\nuse xychain::model::{global_x_flip, ChainSpec, FieldPattern};\\nuse xychain::thermal::gibbs_state; let n = 4;\\nlet u = global_x_flip(n)?;\\nlet h = ChainSpec::new(n, 0.5, 0.9, FieldPattern::Staggered)?.hamiltonian()?;\\nlet rotated = gibbs_state(&u.dot(&h).dot(&u), 0.2)?;\\nlet conjugated = u.dot(gibbs_state(&h, 0.2)?.rho()).dot(&u);\\nassert!(rotated.rho().max_abs_diff(&conjugated) < 1e-11); Ok::<(), xychain::Error>(()) } Since ⊗σ_x factors into single-site unitaries, the states at B and -B have\\nidentical entanglement — and likewise for the sublattice flip relating the\\ntwo field patterns at γ = 0.","breadcrumbs":"Thermal states » Covariance under the symmetry operators","id":"14","title":"Covariance under the symmetry operators"},"15":{"body":"Entanglement of a mixed two-qubit state ρ is measured here by the negativity: transpose the indices of the first qubit only (the partial\\ntranspose ρ^{T₁}), and sum the absolute values of the negative eigenvalues\\nthat appear. A separable state stays positive under partial transposition;\\nfor two qubits the converse holds too, so the negativity is zero exactly on\\nunentangled states and reaches 1/2 on Bell states. Equivalently, in terms of the trace norm ‖·‖₁ (sum of absolute eigenvalues\\nof a Hermitian matrix): N(ρ) = (‖ρ^{T₁}‖₁ - 1)/2. Both definitions are\\nimplemented, independently, and agree to 1e-12 — a cheap consistency check\\non the whole eigenvalue plumbing: #![allow(unused)] fn main() {\\nuse ndarray::array;\\nuse num_complex::Complex64 as C64;\\nuse xychain::entanglement::{negativity_eig, negativity_tracenorm};\\nuse xychain::operator::Operator; // the Bell state (|00⟩ + |11⟩)/√2\\nlet c = |x: f64| C64::new(x, 0.0);\\nlet bell = Operator::from_matrix(array![ [c(0.5), c(0.0), c(0.0), c(0.5)], [c(0.0), c(0.0), c(0.0), c(0.0)], [c(0.0), c(0.0), c(0.0), c(0.0)], [c(0.5), c(0.0), c(0.0), c(0.5)],\\n])?;\\nassert!((negativity_eig(&bell)? - 0.5).abs() < 1e-14);\\nassert!((negativity_tracenorm(&bell)? - 0.5).abs() < 1e-14); Ok::<(), xychain::Error>(()) }","breadcrumbs":"Negativity and X states » Negativity and X states","id":"15","title":"Negativity and X states"},"16":{"body":"partial_trace_pair(rho, i) reduces an N-site density matrix to the pair\\n(i, i+1 mod N), summing over all other sites. The first site of the pair\\nbecomes the most significant qubit of the 4x4 result, so the wrap-around\\npair (N, 1) has site N first: #![allow(unused)] fn main() {\\nuse xychain::entanglement::partial_trace_pair;\\nuse xychain::model::{ChainSpec, FieldPattern};\\nuse xychain::thermal::gibbs_state; let spec = ChainSpec::new(6, 0.5, 1.0, FieldPattern::Staggered)?;\\nlet state = gibbs_state(&spec.hamiltonian()?, 0.2)?;\\nlet pair = partial_trace_pair(state.rho(), 3)?;\\nassert_eq!(pair.dim(), 4);\\nassert!((pair.trace().re - 1.0).abs() < 1e-12); Ok::<(), xychain::Error>(()) }","breadcrumbs":"Negativity and X states » From the chain to a pair","id":"16","title":"From the chain to a pair"},"17":{"body":"Parity symmetry of the chain (see the model chapter) forbids\\nmatrix elements between even and odd parity sectors, so every reduced pair\\nmatrix has nonzero entries only on the main diagonal and the anti-diagonal —\\nan X state: | a1 0 0 b1 |\\n| 0 a2 b2 0 |\\n| 0 b2 a3 0 |\\n| b1 0 0 a4 | extract_xstate reads the six real parameters out of a 4x4 density matrix\\nand errors if anything sits off the X pattern above 1e-10: off-pattern\\nweight cannot arise from this model, so it is treated as evidence of a bug\\nupstream, never discarded silently. For X states the partial transpose simply swaps b1 and b2, each 2x2 block\\ndiagonalizes by hand, and the negativity collapses to a closed form in the\\nsix parameters: N = 1/2 max[0, √((a1-a4)² + 4b2²) - a1 - a4] + 1/2 max[0, √((a2-a3)² + 4b1²) - a2 - a3] #![allow(unused)] fn main() {\\nuse xychain::entanglement::{extract_xstate, negativity_eig, xstate_negativity, partial_trace_pair};\\nuse xychain::model::{ChainSpec, FieldPattern};\\nuse xychain::thermal::gibbs_state; let spec = ChainSpec::new(4, 0.5, 0.8, FieldPattern::Staggered)?;\\nlet state = gibbs_state(&spec.hamiltonian()?, 0.2)?;\\nlet pair = partial_trace_pair(state.rho(), 1)?; let x = extract_xstate(&pair)?;\\nlet closed_form = xstate_negativity(&x)?;\\nlet eigenvalue_route = negativity_eig(&pair)?;\\nassert!((closed_form - eigenvalue_route).abs() < 1e-12); Ok::<(), xychain::Error>(()) } Note the closed form only sees b1², b2²: the signs of the off-diagonal\\nelements never matter to entanglement (they can be rotated away by\\nsingle-site phase gates).","breadcrumbs":"Negativity and X states » X states","id":"17","title":"X states"},"18":{"body":"For N = 2 the entire pipeline — Hamiltonian, Gibbs state, reduction — can be\\nwritten out analytically. analytic_xstate(pattern, γ, B, T) returns the\\nresulting X state directly, with the removable singularity of terms like\\nsinh(βD/4)/D at D → 0 handled by a series so that parameter points where the\\ntwo block energies collide (γ = 1 with B = 0 in a uniform field) are exact\\nrather than NaN: #![allow(unused)] fn main() {\\nuse xychain::entanglement::{analytic_xstate, thermal_pair_negativity, xstate_negativity};\\nuse xychain::model::{ChainSpec, FieldPattern}; let (gamma, b, t) = (0.5, 0.8, 0.2);\\nfor pattern in [FieldPattern::Uniform, FieldPattern::Staggered] { let analytic = xstate_negativity(&analytic_xstate(pattern, gamma, b, t)?)?; let spec = ChainSpec::new(2, gamma, b, pattern)?; let numeric = thermal_pair_negativity(&spec, t, 1)?.value; assert!((analytic - numeric).abs() < 1e-9);\\n} Ok::<(), xychain::Error>(()) } thermal_pair_negativity is the one-call composition used by sweeps: build\\nH, form the Gibbs state, trace to the pair, take the negativity.","breadcrumbs":"Negativity and X states » The two-site chain in closed form","id":"18","title":"The two-site chain in closed form"},"19":{"body":"The characteristic output of this model is a family of negativity-versus-B\\ncurves at fixed temperature: one per (field pattern, γ) combination. The sweep module produces them as data; nothing in the\\ncrate plots — the output is designed to feed whatever plotting tool you\\nalready use.","breadcrumbs":"Sweeps and the command line » Sweeps and the command line","id":"19","title":"Sweeps and the command line"},"2":{"body":"Operators on the chain — the dense operator kernel:\\nPauli matrices, tensor products, site embedding, eigendecomposition. The XY chain in a transverse field — the Hamiltonians, their\\nsymmetries, and the operators realizing them. Thermal states — Gibbs states that stay finite at β = 50. Negativity and X states — partial traces, partial\\ntransposes, and the closed form. Sweeps and the command line — producing curve data with the xychain binary. Every code block in this guide compiles and runs against the current API as\\npart of cargo test.","breadcrumbs":"Introduction » Layout","id":"2","title":"Layout"},"20":{"body":"#![allow(unused)] fn main() {\\nuse xychain::sweep::{run_sweep, PatternSelection, SweepConfig}; let config = SweepConfig { patterns: PatternSelection::Both, gammas: vec![0.0, 0.5], field_min: -2.0, field_max: 2.0, field_step: 0.1, temperature: 0.2, n_sites: 2, pair_site: 1,\\n};\\nlet result = run_sweep(&config)?;\\nassert_eq!(result.series.len(), 4); // 2 patterns x 2 gammas\\nassert_eq!(result.series[0].samples.len(), 41); Ok::<(), xychain::Error>(()) } Grid points are independent and evaluated in parallel, then merged in\\nascending-B order, so a given config always produces byte-identical output.","breadcrumbs":"Sweeps and the command line » The library interface","id":"20","title":"The library interface"},"21":{"body":"Each series carries the B locations of its strict interior local maxima\\nabove a threshold of 1e-4 (plateaus of equal values count once, at their\\nmidpoint; the threshold keeps rounding-level ripple out). Peak structure is\\nthe model’s fingerprint: at γ = 0.5 and T = 0.2 the staggered series has\\nexactly two peaks and the uniform series three — the third being the\\nsurvival of entanglement around B = 0 that the staggered field suppresses —\\nwhile at γ = 1 a uniform-field sweep shows a single central peak. #![allow(unused)] fn main() {\\nuse xychain::sweep::{count_peaks, run_sweep, PatternSelection, SweepConfig}; let config = SweepConfig { patterns: PatternSelection::Both, gammas: vec![0.5], field_min: -2.0, field_max: 2.0, field_step: 0.01, temperature: 0.2, n_sites: 2, pair_site: 1,\\n};\\nlet result = run_sweep(&config)?;\\nfor series in &result.series { let expected = if series.pattern == \\"staggered\\" { 2 } else { 3 }; assert_eq!(series.peaks.len(), expected);\\n} Ok::<(), xychain::Error>(()) } count_peaks is also available directly for series you compute yourself.","breadcrumbs":"Sweeps and the command line » Peaks","id":"21","title":"Peaks"},"22":{"body":"The same sweep from the shell: xychain sweep --pattern both --gamma 0,0.5 \\\\ --b-min -2 --b-max 2 --b-step 0.01 \\\\ --temp 0.2 --sites 2 --pair 1 \\\\ --out curves.csv --format csv --b-min/--b-max/--b-step default to the [-2, 2] range in steps of 0.01\\nthat covers all of the model’s peak structure; --pair defaults to site 1.\\nThe binary exits 0 on success and 1 on any argument or configuration\\nproblem. CSV output has the fixed header pattern,gamma,n_sites,temperature,B,negativity, one row per sample, all\\nfloats printed with 12 significant digits, LF line endings: pattern,gamma,n_sites,temperature,B,negativity\\nuniform,0.00000000000e0,2,2.00000000000e-1,-2.00000000000e0,6.19282280748e-2\\nuniform,0.00000000000e0,2,2.00000000000e-1,-1.99000000000e0,6.22304586530e-2\\n... JSON output ( --format json) mirrors the same samples grouped by series and\\nadds each series’ peaks array plus an echo of the configuration.","breadcrumbs":"Sweeps and the command line » The binary","id":"22","title":"The binary"},"23":{"body":"xychain verify runs the invariant suite — Hamiltonian structure, the two\\nunitary identities, negativity symmetry under B → -B, pattern equivalence at\\nγ = 0, closed-form versus numerical agreement, and Gibbs-state structure —\\nprinting one line per check: pass hamiltonian hermiticity and parity symmetry (worst 0.000e0, tolerance 1e-13)\\npass field-sign reversal by the global x flip (worst 0.000e0, tolerance 1e-13)\\n...\\nall 7 checks passed It exits 0 when everything holds and 2 on any violation, so it can guard a\\nCI job or a long parameter scan.","breadcrumbs":"Sweeps and the command line » Self-checks","id":"23","title":"Self-checks"},"3":{"body":"The kernel underneath everything else is a dense complex matrix type, Operator, representing linear maps on\\nthe 2^N-dimensional Hilbert space of an N-site chain. Dimensions are always\\npowers of two and capped at 2^12 = 4096; construction fails beyond that\\nrather than letting a sweep quietly allocate gigabytes.","breadcrumbs":"Operators on the chain » Operators on the chain","id":"3","title":"Operators on the chain"},"4":{"body":"Basis states are labeled by bit strings; site 1 owns the most significant\\nbit. For two sites the basis order is |00⟩, |01⟩, |10⟩, |11⟩, and a σ_z on\\nsite 1 is diagonal with signs (+, +, -, -): #![allow(unused)] fn main() {\\nuse xychain::operator::{pauli_z, site_operator}; let z1 = site_operator(&pauli_z(), 1, 2)?;\\nlet diag: Vec<f64> = (0..4).map(|i| z1.entry(i, i).re).collect();\\nassert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]); Ok::<(), xychain::Error>(()) } This is the convention in which all matrices in this guide — and the\\ntwo-qubit X-state layout in Negativity and X states — are\\nwritten.","breadcrumbs":"Operators on the chain » Basis convention","id":"4","title":"Basis convention"},"5":{"body":"Single-site and few-site operators are embedded into the chain with\\nidentities everywhere else. site_operator places one 2x2 factor; embedded_product places several at once (the bread and butter of\\nHamiltonian construction, where a bond term s_ix s_jx needs factors at two\\nsites): #![allow(unused)] fn main() {\\nuse xychain::operator::{embedded_product, kron, spin_x, Operator}; // s_1x s_2x on a 3-site chain, built two ways\\nlet sx = spin_x();\\nlet direct = embedded_product(&[(1, &sx), (2, &sx)], 3)?;\\nlet by_kron = kron(&kron(&sx, &sx)?, &Operator::identity(2)?)?;\\nassert!(direct.max_abs_diff(&by_kron) == 0.0); Ok::<(), xychain::Error>(()) } kron(a, b) is the plain Kronecker product, with the left factor owning the\\nmore significant bits — consistent with the site-1-is-MSB rule. Operators on\\ndisjoint sites always commute, which makes a good smoke test for any\\nembedding code: #![allow(unused)] fn main() {\\nuse xychain::operator::{pauli_x, pauli_y, site_operator}; let a = site_operator(&pauli_x(), 1, 3)?;\\nlet b = site_operator(&pauli_y(), 2, 3)?;\\nassert!(a.commutator_max_norm(&b)? < 1e-14); Ok::<(), xychain::Error>(()) }","breadcrumbs":"Operators on the chain » Building multi-site operators","id":"5","title":"Building multi-site operators"},"6":{"body":"Operator::eig_hermitian validates Hermiticity (to 1e-12) and returns a Spectrum: ascending eigenvalues with\\northonormal eigenvector columns. The decomposition is the engine behind both\\nthermal states (exponentiating H) and negativity (eigenvalues of a partial\\ntranspose). Its contract is the reconstruction identity V diag(λ) V† = A: #![allow(unused)] fn main() {\\nuse xychain::operator::{kron, pauli_x, pauli_z}; let h = kron(&pauli_z(), &pauli_x())?;\\nlet spectrum = h.eig_hermitian()?;\\nassert!(spectrum.reconstruct().max_abs_diff(&h) < 1e-12); // σ_z ⊗ σ_x has eigenvalues ±1, each doubly degenerate\\nlet w = spectrum.eigenvalues();\\nassert!((w[0] + 1.0).abs() < 1e-14 && (w[3] - 1.0).abs() < 1e-14); Ok::<(), xychain::Error>(()) } Non-Hermitian input is rejected rather than silently symmetrized: #![allow(unused)] fn main() {\\nuse ndarray::array;\\nuse num_complex::Complex64 as C64;\\nuse xychain::operator::Operator;\\nuse xychain::Error; let m = Operator::from_matrix(array![ [C64::new(0.0, 0.0), C64::new(1.0, 0.0)], [C64::new(0.0, 0.0), C64::new(0.0, 0.0)],\\n])?;\\nassert!(matches!(m.eig_hermitian(), Err(Error::NotHermitian { .. }))); Ok::<(), xychain::Error>(()) } One implementation note: the chain Hamiltonians are real matrices in this\\nbasis (the y-y coupling multiplies two imaginary factors), and eig_hermitian quietly routes exactly-real matrices through the cheaper\\nreal-symmetric solver. Nothing about the result changes; ten-site sweeps\\njust finish measurably faster.","breadcrumbs":"Operators on the chain » Hermitian eigendecomposition","id":"6","title":"Hermitian eigendecomposition"},"7":{"body":"The model lives on a ring of N spin-1/2 sites (N even, between 2 and 12)\\nand is fixed by four numbers and a pattern choice: H = Σ_bonds J [ s_ix s_jx + γ s_iy s_jy ] + Σ_i f_i B s_iz J — exchange coupling, 1 by default (antiferromagnetic); γ — anisotropy between the x-x and y-y couplings: γ = 0 is the\\ntransverse-field Ising limit, γ = 1 the isotropic XX chain; B — field magnitude, in units of J; f_i — the field pattern: f_i = 1 (uniform) or f_i = (-1)^(i-1)\\n(staggered, +B on site 1). ChainSpec validates the parameters and\\nbuilds the dense Hamiltonian: #![allow(unused)] fn main() {\\nuse xychain::model::{ChainSpec, FieldPattern}; let spec = ChainSpec::new(6, 0.5, 1.2, FieldPattern::Staggered)?;\\nlet h = spec.hamiltonian()?;\\nassert_eq!(h.dim(), 64);\\nassert!(h.hermiticity_deviation() < 1e-12); // odd chains cannot stagger consistently around the ring\\nassert!(ChainSpec::new(5, 0.5, 1.2, FieldPattern::Staggered).is_err()); Ok::<(), xychain::Error>(()) }","breadcrumbs":"The XY chain in a transverse field » The XY chain in a transverse field","id":"7","title":"The XY chain in a transverse field"},"8":{"body":"On a ring, the bond list {(1,2), (2,3), …, (N,1)} visits each neighbor pair\\nonce — except at N = 2, where (1,2) and (2,1) are the same bond and the\\nperiodic sum would count it twice. ChainSpec therefore switches to a\\nsingle-bond rule at N = 2, which is the form the two-site closed-form\\nresults are written in. The periodic double-counting remains available\\nexplicitly (it is exactly a factor of two on the coupling): #![allow(unused)] fn main() {\\nuse xychain::model::{Boundary, ChainSpec, FieldPattern}; let single = ChainSpec::new(2, 0.5, 0.0, FieldPattern::Uniform)?;\\nlet doubled = single.with_boundary(Boundary::Periodic);\\nlet h1 = single.hamiltonian()?;\\nlet h2 = doubled.hamiltonian()?;\\nassert!(h2.max_abs_diff(&(&h1 * 2.0)) < 1e-15); Ok::<(), xychain::Error>(()) }","breadcrumbs":"The XY chain in a transverse field » The two-site special case","id":"8","title":"The two-site special case"},"9":{"body":"Both Hamiltonians commute with the global parity operator P = ⊗_i σ_z: the\\ncouplings flip two spins at a time and the field flips none, so the parity\\nof the number of up-spins is conserved. z2_commutator_norm measures the\\nviolation, which should be exactly zero up to rounding: #![allow(unused)] fn main() {\\nuse xychain::model::{z2_commutator_norm, ChainSpec, FieldPattern}; let h = ChainSpec::new(4, 0.5, 1.0, FieldPattern::Staggered)?.hamiltonian()?;\\nassert!(z2_commutator_norm(&h, 4)? < 1e-13); Ok::<(), xychain::Error>(()) } This symmetry is why the reduced two-site matrices in Negativity and X\\nstates take the sparse X shape: matrix elements between\\ndifferent parity sectors vanish identically.","breadcrumbs":"The XY chain in a transverse field » Parity symmetry","id":"9","title":"Parity symmetry"}},"docInfo":{"0":{"body":156,"breadcrumbs":2,"title":1},"1":{"body":93,"breadcrumbs":4,"title":3},"10":{"body":166,"breadcrumbs":9,"title":5},"11":{"body":53,"breadcrumbs":4,"title":2},"12":{"body":101,"breadcrumbs":5,"title":3},"13":{"body":97,"breadcrumbs":5,"title":3},"14":{"body":68,"breadcrumbs":6,"title":4},"15":{"body":116,"breadcrumbs":6,"title":3},"16":{"body":58,"breadcrumbs":5,"title":2},"17":{"body":157,"breadcrumbs":5,"title":2},"18":{"body":94,"breadcrumbs":8,"title":5},"19":{"body":30,"breadcrumbs":6,"title":3},"2":{"body":55,"breadcrumbs":2,"title":1},"20":{"body":55,"breadcrumbs":5,"title":2},"21":{"body":103,"breadcrumbs":4,"title":1},"22":{"body":99,"breadcrumbs":4,"title":1},"23":{"body":68,"breadcrumbs":5,"title":2},"3":{"body":33,"breadcrumbs":4,"title":2},"4":{"body":57,"breadcrumbs":4,"title":2},"5":{"body":108,"breadcrumbs":6,"title":4},"6":{"body":131,"breadcrumbs":4,"title":2},"7":{"body":104,"breadcrumbs":8,"title":4},"8":{"body":71,"breadcrumbs":8,"title":4},"9":{"body":67,"breadcrumbs":6,"title":2}},"length":24},"lang":"English"}}'));
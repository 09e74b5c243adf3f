[closedset]
label = geo1_J11
source = J11
targets = J7 J15 J16
basis = f1 f2 f3 e
condition: c[*,*,1] = 0
condition: 2*c[3,4,3] = c[4,4,4]

[closedset]
label = geo3_Jf26
source = Jf26
targets = Jf25
basis = e1 e2 e3 f
condition: c[2,2,2] = 0
condition: c[2,3,1] = 0
condition: c[2,3,2] = 0
condition: c[3,3,2] = 0
condition: c[2,4,4] = 1/2*c[2,3,3]
condition: c[3,4,4] = 1/2*c[3,3,3]
